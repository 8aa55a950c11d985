#include "grw/repring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace grw::rep {

Field parse_field(const std::string& s)
{
    if (s == "R" || s == "r" || s == "real")
        return Field::Real;
    if (s == "C" || s == "c" || s == "complex")
        return Field::Complex;
    throw std::invalid_argument("field must be R or C");
}

RepRing::RepRing(CharTable table, Field field) : table_(std::move(table)), field_(field)
{
    table_.validate();
    if (field_ == Field::Complex) {
        names_ = table_.names;
        basis_values_ = table_.chars;
        real_to_complex_.clear();
        for (int i = 0; i < table_.count(); ++i) {
            VirtualRep e(table_.count(), 0);
            e[i] = 1;
            real_to_complex_.push_back(std::move(e));
        }
    }
    else {
        build_real_basis();
    }
    for (int i = 0; i < rank(); ++i) {
        const Cyclo& v = basis_values_[i][table_.group.class_of(0)];
        mpq_class q;
        if (!v.is_rational_value(q) || q.get_den() != 1)
            throw std::logic_error("basis dimension is not an integer");
        dims_.push_back(static_cast<int>(q.get_num().get_si()));
    }
    for (int i = 0; i < rank(); ++i) {
        bool is_triv = true;
        for (int c = 0; c < table_.group.class_count() && is_triv; ++c)
            is_triv = basis_values_[i][c] == Cyclo::root(table_.e, 0);
        if (is_triv) {
            trivial_ = i;
            break;
        }
    }
    if (trivial_ < 0)
        throw std::logic_error("no trivial character in the basis");
    for (int i = 0; i < rank(); ++i)
        if (dims_[i] == 1)
            lines_.push_back(i);

    build_eliminator();
    build_structure();
}

int RepRing::fs_indicator(int complex_irr) const
{
    // multiplicity of the trivial character in Psi^2(chi): the
    // averaged chi(g^2) without leaving exact arithmetic
    const FiniteGroup& G = table_.group;
    Cyclo s(table_.e);
    for (int c = 0; c < G.class_count(); ++c)
        s += table_.chars[complex_irr][G.power_class(c, 2)] * mpq_class(G.class_size(c));
    mpq_class q;
    if (!s.is_rational_value(q))
        throw std::logic_error("indicator is not rational");
    mpq_class ind = q / G.order();
    if (ind.get_den() != 1)
        throw std::logic_error("indicator is not an integer");
    long v = ind.get_num().get_si();
    if (v < -1 || v > 1)
        throw std::logic_error("indicator out of range");
    return static_cast<int>(v);
}

void RepRing::build_real_basis()
{
    const int n = table_.count();
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
        if (used[i])
            continue;
        int ind = fs_indicator(i);
        if (ind == 1) {
            used[i] = 1;
            names_.push_back(table_.names[i]);
            basis_values_.push_back(table_.chars[i]);
            VirtualRep comb(n, 0);
            comb[i] = 1;
            real_to_complex_.push_back(std::move(comb));
        }
        else if (ind == 0) {
            // find the conjugate partner
            int partner = -1;
            for (int j = 0; j < n && partner < 0; ++j) {
                if (j == i || used[j])
                    continue;
                bool match = true;
                for (int c = 0; c < table_.group.class_count() && match; ++c)
                    match = table_.chars[j][c] == table_.chars[i][c].conj();
                if (match)
                    partner = j;
            }
            if (partner < 0)
                throw std::logic_error("conjugate character missing");
            used[i] = used[partner] = 1;
            std::vector<Cyclo> sum;
            for (int c = 0; c < table_.group.class_count(); ++c)
                sum.push_back(table_.chars[i][c] + table_.chars[partner][c]);
            // folded pairs of powers of a cyclic generator are the
            // standard r_k
            std::string nm = table_.names[i];
            if (nm == "rho")
                nm = "r1";
            else if (nm.rfind("rho^", 0) == 0)
                nm = "r" + nm.substr(4);
            else
                nm = "r(" + nm + ")";
            names_.push_back(nm);
            basis_values_.push_back(std::move(sum));
            VirtualRep comb(n, 0);
            comb[i] = 1;
            comb[partner] = 1;
            real_to_complex_.push_back(std::move(comb));
        }
        else {
            throw std::invalid_argument(
                "quaternionic irreducible: real folding unsupported");
        }
    }
}

std::vector<mpq_class> RepRing::flatten(const std::vector<Cyclo>& vals) const
{
    std::vector<mpq_class> flat;
    flat.reserve(vals.size() * table_.e);
    for (const auto& v : vals)
        for (int k = 0; k < table_.e; ++k)
            flat.push_back(v.coeff(k));
    return flat;
}

void RepRing::build_eliminator()
{
    const int m = rank();
    rref_rows_.clear();
    rref_comb_.clear();
    rref_pivots_.clear();
    for (int i = 0; i < m; ++i) {
        std::vector<mpq_class> row = flatten(basis_values_[i]);
        std::vector<mpq_class> comb(m, 0);
        comb[i] = 1;
        // eliminate against existing pivots
        for (size_t k = 0; k < rref_rows_.size(); ++k) {
            const mpq_class& c = row[rref_pivots_[k]];
            if (c == 0)
                continue;
            mpq_class f = c;
            for (size_t j = 0; j < row.size(); ++j)
                row[j] -= f * rref_rows_[k][j];
            for (int j = 0; j < m; ++j)
                comb[j] -= f * rref_comb_[k][j];
        }
        int pivot = -1;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                pivot = static_cast<int>(j);
                break;
            }
        if (pivot < 0)
            throw std::logic_error("basis characters are linearly dependent");
        mpq_class inv = 1 / row[pivot];
        for (auto& v : row)
            v *= inv;
        for (auto& v : comb)
            v *= inv;
        rref_rows_.push_back(std::move(row));
        rref_comb_.push_back(std::move(comb));
        rref_pivots_.push_back(pivot);
    }
}

std::optional<VirtualRepQ> RepRing::decompose(const std::vector<Cyclo>& vals) const
{
    std::vector<mpq_class> row = flatten(vals);
    VirtualRepQ coeffs(rank(), 0);
    for (size_t k = 0; k < rref_rows_.size(); ++k) {
        const mpq_class& c = row[rref_pivots_[k]];
        if (c == 0)
            continue;
        mpq_class f = c;
        for (size_t j = 0; j < row.size(); ++j)
            row[j] -= f * rref_rows_[k][j];
        for (int j = 0; j < rank(); ++j)
            coeffs[j] += f * rref_comb_[k][j];
    }
    for (const auto& v : row)
        if (v != 0)
            return std::nullopt;
    return coeffs;
}

VirtualRep RepRing::unit() const
{
    VirtualRep u = zero();
    u[trivial_] = 1;
    return u;
}

VirtualRep RepRing::irreducible(int i) const
{
    VirtualRep u = zero();
    u.at(i) = 1;
    return u;
}

std::vector<Cyclo> RepRing::values(const VirtualRepQ& x) const
{
    std::vector<Cyclo> out(table_.group.class_count(), Cyclo(table_.e));
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0)
            continue;
        for (int c = 0; c < table_.group.class_count(); ++c)
            out[c] += basis_values_[i][c] * x[i];
    }
    return out;
}

std::vector<Cyclo> RepRing::values(const VirtualRep& x) const
{
    VirtualRepQ q(x.begin(), x.end());
    return values(q);
}

void RepRing::build_structure()
{
    const int m = rank();
    structure_.assign(m, std::vector<VirtualRep>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::vector<Cyclo> prod;
            prod.reserve(table_.group.class_count());
            for (int c = 0; c < table_.group.class_count(); ++c)
                prod.push_back(basis_values_[i][c] * basis_values_[j][c]);
            auto dec = decompose(prod);
            if (!dec)
                throw std::logic_error("product leaves the character span");
            VirtualRep z(m, 0);
            for (int k = 0; k < m; ++k) {
                if ((*dec)[k].get_den() != 1)
                    throw std::logic_error("non-integral structure constant");
                z[k] = (*dec)[k].get_num();
            }
            structure_[i][j] = z;
            structure_[j][i] = std::move(z);
        }
}

VirtualRep RepRing::mul(const VirtualRep& a, const VirtualRep& b) const
{
    VirtualRep out = zero();
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < rank(); ++j) {
            if (b[j] == 0)
                continue;
            mpz_class f = a[i] * b[j];
            const VirtualRep& n = structure_[i][j];
            for (int k = 0; k < rank(); ++k)
                if (n[k] != 0)
                    out[k] += f * n[k];
        }
    }
    return out;
}

VirtualRepQ RepRing::mul(const VirtualRepQ& a, const VirtualRepQ& b) const
{
    VirtualRepQ out(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < rank(); ++j) {
            if (b[j] == 0)
                continue;
            mpq_class f = a[i] * b[j];
            const VirtualRep& n = structure_[i][j];
            for (int k = 0; k < rank(); ++k)
                if (n[k] != 0)
                    out[k] += f * mpq_class(n[k]);
        }
    }
    return out;
}

VirtualRep RepRing::adams(int64_t k, const VirtualRep& x) const
{
    const FiniteGroup& G = table_.group;
    std::vector<Cyclo> vals(G.class_count(), Cyclo(table_.e));
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0)
            continue;
        for (int c = 0; c < G.class_count(); ++c)
            vals[c] += basis_values_[i][G.power_class(c, k)] * mpq_class(x[i]);
    }
    auto dec = decompose(vals);
    if (!dec)
        throw std::logic_error("Adams image leaves the character span");
    VirtualRep out(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
        if ((*dec)[i].get_den() != 1)
            throw std::logic_error("non-integral Adams decomposition");
        out[i] = (*dec)[i].get_num();
    }
    return out;
}

VirtualRep RepRing::lambda(int k, const VirtualRep& x) const
{
    if (k < 0)
        throw std::invalid_argument("lambda index must be non-negative");
    // Newton: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
    std::vector<VirtualRepQ> e(static_cast<size_t>(k) + 1, VirtualRepQ(rank(), 0));
    e[0][trivial_] = 1;
    std::vector<VirtualRep> p(static_cast<size_t>(k) + 1);
    for (int i = 1; i <= k; ++i)
        p[i] = adams(i, x);
    for (int m = 1; m <= k; ++m) {
        VirtualRepQ acc(rank(), 0);
        for (int i = 1; i <= m; ++i) {
            VirtualRepQ pq(p[i].begin(), p[i].end());
            VirtualRepQ term = mul(e[m - i], pq);
            mpq_class sign = (i % 2) ? 1 : -1;
            for (int j = 0; j < rank(); ++j)
                acc[j] += sign * term[j];
        }
        for (int j = 0; j < rank(); ++j)
            e[m][j] = acc[j] / m;
    }
    VirtualRep out(rank(), 0);
    for (int j = 0; j < rank(); ++j) {
        if (e[k][j].get_den() != 1)
            throw std::logic_error("non-integral exterior power");
        out[j] = e[k][j].get_num();
    }
    return out;
}

VirtualRep RepRing::gamma(int k, const VirtualRep& x) const
{
    VirtualRep shifted = x;
    shifted[trivial_] += k - 1;
    return lambda(k, shifted);
}

VirtualRep RepRing::gamma_neg(int k, const VirtualRep& x) const
{
    std::vector<VirtualRep> g(static_cast<size_t>(k) + 1, zero());
    g[0] = unit();
    for (int m = 1; m <= k; ++m) {
        VirtualRep acc = zero();
        for (int i = 1; i <= m; ++i) {
            VirtualRep term = mul(gamma(i, x), g[m - i]);
            for (int j = 0; j < rank(); ++j)
                acc[j] += term[j];
        }
        for (int j = 0; j < rank(); ++j)
            g[m][j] = -acc[j];
    }
    return g[k];
}

mpz_class RepRing::augmentation(const VirtualRep& x) const
{
    mpz_class d = 0;
    for (int i = 0; i < rank(); ++i)
        d += x[i] * dims_[i];
    return d;
}

bool RepRing::conjugation_fixed(const VirtualRep& x) const
{
    auto vals = values(x);
    for (const auto& v : vals)
        if (!(v == v.conj()))
            return false;
    return true;
}

}  // namespace grw::rep
