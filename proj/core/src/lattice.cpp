#include "grw/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace grw::lattice {

namespace {

mpz_class fdiv(const mpz_class& a, const mpz_class& b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntegerLattice::IntegerLattice(int ambient) : ambient_(ambient) {}

IntegerLattice IntegerLattice::full(int ambient)
{
    IntegerLattice l(ambient);
    for (int i = 0; i < ambient; ++i) {
        Vec e(ambient, 0);
        e[i] = 1;
        l.add(std::move(e));
    }
    return l;
}

bool IntegerLattice::add(Vec v)
{
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("vector arity mismatch");
    bool grew = false;
    for (int c = 0; c < ambient_; ++c) {
        if (v[c] == 0)
            continue;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
        size_t k = static_cast<size_t>(it - pivots_.begin());
        if (it == pivots_.end() || *it != c) {
            // new pivot row
            if (v[c] < 0)
                for (auto& x : v)
                    x = -x;
            rows_.insert(rows_.begin() + k, std::move(v));
            pivots_.insert(it, c);
            reduce_above(k);
            return true;
        }
        Vec& row = rows_[k];
        if (v[c] % row[c] == 0) {
            mpz_class q = v[c] / row[c];
            for (int j = c; j < ambient_; ++j)
                v[j] -= q * row[j];
            continue;
        }
        // gcd combine
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[c].get_mpz_t(),
                   v[c].get_mpz_t());
        mpz_class rc = row[c] / g, vc = v[c] / g;
        for (int j = c; j < ambient_; ++j) {
            mpz_class nr = s * row[j] + t * v[j];
            mpz_class nv = rc * v[j] - vc * row[j];
            row[j] = std::move(nr);
            v[j] = std::move(nv);
        }
        grew = true;
        reduce_above(k);
    }
    return grew;
}

void IntegerLattice::add_all(const Mat& vs)
{
    for (const auto& v : vs)
        add(v);
}

void IntegerLattice::reduce_above(size_t k)
{
    // rows above k get their entry at pivots_[k] reduced into
    // [0, pivot); also re-reduce against all later pivots since the
    // combination may have disturbed them
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (size_t l = std::max(i + 1, k); l < rows_.size(); ++l) {
            int pc = pivots_[l];
            if (rows_[i][pc] == 0)
                continue;
            mpz_class q = fdiv(rows_[i][pc], rows_[l][pc]);
            if (q == 0)
                continue;
            for (int j = pc; j < ambient_; ++j)
                rows_[i][j] -= q * rows_[l][j];
        }
    }
}

bool IntegerLattice::contains(const Vec& v) const
{
    return coordinates(v).has_value();
}

std::optional<Vec> IntegerLattice::coordinates(const Vec& v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("vector arity mismatch");
    Vec rem = v;
    Vec coords(rows_.size(), 0);
    for (size_t k = 0; k < rows_.size(); ++k) {
        int c = pivots_[k];
        if (rem[c] == 0)
            continue;
        if (rem[c] % rows_[k][c] != 0)
            return std::nullopt;
        mpz_class q = rem[c] / rows_[k][c];
        for (int j = c; j < ambient_; ++j)
            rem[j] -= q * rows_[k][j];
        coords[k] = std::move(q);
    }
    for (const auto& x : rem)
        if (x != 0)
            return std::nullopt;
    return coords;
}

// ---- Smith normal form ----

SmithDecomposition smith_normal_form(Mat a)
{
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    SmithDecomposition out;
    out.V.assign(cols, Vec(cols, 0));
    out.Vinv.assign(cols, Vec(cols, 0));
    for (size_t i = 0; i < cols; ++i)
        out.V[i][i] = out.Vinv[i][i] = 1;

    auto col_sub = [&](size_t j, size_t i, const mpz_class& q) {
        // col_j -= q col_i  (A and V), Vinv row_i += q row_j
        for (size_t r = 0; r < rows; ++r)
            a[r][j] -= q * a[r][i];
        for (size_t r = 0; r < cols; ++r)
            out.V[r][j] -= q * out.V[r][i];
        for (size_t cidx = 0; cidx < cols; ++cidx)
            out.Vinv[i][cidx] += q * out.Vinv[j][cidx];
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r)
            std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < cols; ++r)
            std::swap(out.V[r][i], out.V[r][j]);
        std::swap(out.Vinv[i], out.Vinv[j]);
    };
    auto row_sub = [&](size_t i2, size_t i1, const mpz_class& q) {
        for (size_t c = 0; c < cols; ++c)
            a[i2][c] -= q * a[i1][c];
    };
    auto row_swap = [&](size_t i, size_t j) { std::swap(a[i], a[j]); };
    auto row_neg = [&](size_t i) {
        for (size_t c = 0; c < cols; ++c)
            a[i][c] = -a[i][c];
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // find a pivot: smallest absolute nonzero in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found)
            break;
        if (pi != t)
            row_swap(pi, t);
        if (pj != t)
            col_swap(pj, t);
        if (a[t][t] < 0)
            row_neg(t);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0)
                continue;
            mpz_class q = fdiv(a[i][t], a[t][t]);
            row_sub(i, t, q);
            if (a[i][t] != 0)
                clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0)
                continue;
            mpz_class q = fdiv(a[t][j], a[t][t]);
            col_sub(j, t, q);
            if (a[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue;  // smaller remainders appeared; repeat with them

        // divisibility: a[t][t] must divide the trailing block
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
            for (size_t j = t + 1; j < cols && !fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_sub(t, i, mpz_class(-1));  // row_t += row_i
                    fixed = true;
                }
        if (fixed)
            continue;
        ++t;
    }
    for (size_t k = 0; k < std::min(rows, cols); ++k)
        out.diag.push_back(k < rows ? a[k][k] : mpz_class(0));
    return out;
}

// ---- quotient of nested lattices ----

QuotientStructure::QuotientStructure(const IntegerLattice& outer, const IntegerLattice& inner)
    : outer_(outer)
{
    if (outer.ambient() != inner.ambient())
        throw std::invalid_argument("lattice arity mismatch");
    const size_t n_out = static_cast<size_t>(outer.rank());
    Mat A;
    for (const auto& row : inner.basis()) {
        auto coords = outer.coordinates(row);
        if (!coords)
            throw std::invalid_argument("inner lattice is not contained in the outer one");
        A.push_back(std::move(*coords));
    }
    SmithDecomposition snf = smith_normal_form(std::move(A));
    vmat_ = std::move(snf.V);
    if (vmat_.empty()) {
        vmat_.assign(n_out, Vec(n_out, 0));
        snf.Vinv.assign(n_out, Vec(n_out, 0));
        for (size_t i = 0; i < n_out; ++i)
            vmat_[i][i] = snf.Vinv[i][i] = 1;
    }

    // new outer basis rows: Vinv . outer basis
    new_basis_.assign(n_out, Vec(outer.ambient(), 0));
    for (size_t i = 0; i < n_out; ++i)
        for (size_t k = 0; k < n_out; ++k) {
            if (snf.Vinv[i][k] == 0)
                continue;
            for (int j = 0; j < outer.ambient(); ++j)
                new_basis_[i][j] += snf.Vinv[i][k] * outer.basis()[k][j];
        }

    std::vector<mpz_class> all_factors(n_out, 0);
    for (size_t k = 0; k < snf.diag.size() && k < n_out; ++k)
        all_factors[k] = snf.diag[k];
    for (size_t k = 0; k < n_out; ++k) {
        if (all_factors[k] == 1)
            continue;  // trivial summand
        factors_.push_back(all_factors[k]);
        lifts_.push_back(new_basis_[k]);
        kept_.push_back(static_cast<int>(k));
    }
}

Vec QuotientStructure::project(const Vec& v) const
{
    auto x = outer_.coordinates(v);
    if (!x)
        throw std::invalid_argument("vector outside the outer lattice");
    const size_t n_out = x->size();
    Vec res;
    res.reserve(kept_.size());
    for (size_t idx = 0; idx < kept_.size(); ++idx) {
        size_t k = static_cast<size_t>(kept_[idx]);
        mpz_class acc = 0;
        for (size_t i = 0; i < n_out; ++i)
            acc += (*x)[i] * vmat_[i][k];
        if (factors_[idx] != 0) {
            mpz_class m;
            mpz_fdiv_r(m.get_mpz_t(), acc.get_mpz_t(), factors_[idx].get_mpz_t());
            acc = m;
        }
        res.push_back(std::move(acc));
    }
    return res;
}

std::optional<mpz_class> QuotientStructure::order() const
{
    mpz_class o = 1;
    for (const auto& f : factors_) {
        if (f == 0)
            return std::nullopt;
        o *= f;
    }
    return o;
}

}  // namespace grw::lattice
