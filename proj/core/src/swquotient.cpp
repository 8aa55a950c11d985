#include "grw/swquotient.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <sstream>

namespace grw::swq {

using poly::Mono;
using poly::PolyF2;
using steenrod::Caps;
using steenrod::SteenrodOp;

SubsetAlgElt::SubsetAlgElt(std::vector<SubsetTerm> terms) : terms_(std::move(terms))
{
    for (const auto& t : terms_)
        if (t.mask == 0 ? t.deg != 0 : std::popcount(t.mask) > t.deg)
            throw std::invalid_argument("subset symbol violates |I| <= n");
    std::sort(terms_.begin(), terms_.end());
    std::vector<SubsetTerm> out;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i])
            ++j;
        if ((j - i) % 2)
            out.push_back(terms_[i]);
        i = j;
    }
    terms_.swap(out);
}

SubsetAlgElt SubsetAlgElt::symbol(uint64_t mask, int64_t deg)
{
    return SubsetAlgElt({SubsetTerm{mask, deg}});
}

SubsetAlgElt& SubsetAlgElt::operator+=(const SubsetAlgElt& o)
{
    std::vector<SubsetTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i] == o.terms_[j])
            ++i, ++j;
        else if (terms_[i] < o.terms_[j])
            merged.push_back(terms_[i++]);
        else
            merged.push_back(o.terms_[j++]);
    }
    merged.insert(merged.end(), terms_.begin() + i, terms_.end());
    merged.insert(merged.end(), o.terms_.begin() + j, o.terms_.end());
    terms_.swap(merged);
    return *this;
}

SubsetAlgElt SubsetAlgElt::operator*(const SubsetAlgElt& o) const
{
    std::map<SubsetTerm, bool> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            SubsetTerm t{a.mask | b.mask, a.deg + b.deg};
            auto [it, fresh] = acc.emplace(t, true);
            if (!fresh)
                it->second = !it->second;
        }
    std::vector<SubsetTerm> out;
    for (auto& [t, odd] : acc)
        if (odd)
            out.push_back(t);
    SubsetAlgElt r;
    r.terms_ = std::move(out);
    return r;
}

std::string SubsetAlgElt::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            os << " + ";
        const auto& t = terms_[i];
        if (t.mask == 0) {
            os << "1";
            continue;
        }
        os << "t{";
        bool first = true;
        for (int v = 0; v < 64; ++v)
            if (t.mask & (uint64_t(1) << v)) {
                if (!first)
                    os << ",";
                first = false;
                os << (v + 1);
            }
        os << "}," << t.deg;
    }
    return os.str();
}

SubsetAlgElt reduce_elem_abelian(const PolyF2& p)
{
    std::vector<SubsetTerm> terms;
    for (const auto& m : p.terms()) {
        uint64_t mask = 0;
        int64_t deg = 0;
        for (size_t v = 0; v < m.e.size(); ++v)
            if (m.e[v]) {
                mask |= uint64_t(1) << v;
                deg += m.e[v];
            }
        terms.push_back(SubsetTerm{mask, deg});
    }
    return SubsetAlgElt(std::move(terms));
}

int64_t subset_algebra_dim(int r, int64_t n)
{
    if (n == 0)
        return 1;
    if (n < 0)
        return 0;
    int64_t count = 0;
    for (uint64_t mask = 1; mask < (uint64_t(1) << r); ++mask)
        if (std::popcount(mask) <= n)
            ++count;
    return count;
}

bool ideal_member_theta(const PolyF2& p, const Caps& caps)
{
    (void)caps;
    if (p.is_zero())
        return true;
    if (!p.homogeneous())
        throw std::invalid_argument("ideal membership needs a homogeneous class");
    if (p.degree() < 1)
        throw std::invalid_argument("ideal membership needs positive degree");
    return poly::theta_action(p).is_zero();
}

namespace {

int mono_index(const std::vector<Mono>& monos, const Mono& m)
{
    auto it = std::lower_bound(monos.begin(), monos.end(), m);
    assert(it != monos.end() && *it == m);
    return static_cast<int>(it - monos.begin());
}

std::vector<uint8_t> poly_coords(const PolyF2& p, const std::vector<Mono>& monos)
{
    std::vector<uint8_t> v(monos.size(), 0);
    for (const auto& m : p.terms())
        v[mono_index(monos, m)] ^= 1;
    return v;
}

}  // namespace

f2::Matrix ideal_span_degree(const std::vector<PolyF2>& gens, int64_t d, int r)
{
    auto monos = poly::monomials_of_degree(r, d);
    f2::Matrix rows(0, static_cast<int>(monos.size()));
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        if (!g.homogeneous())
            throw std::invalid_argument("ideal generators must be homogeneous");
        int64_t dg = g.degree();
        if (dg > d)
            continue;
        for (const auto& m : poly::monomials_of_degree(r, d - dg)) {
            PolyF2 prod = g * PolyF2(r, {m});
            rows.append_row(poly_coords(prod, monos));
        }
    }
    rows.rref();
    return rows;
}

f2::Matrix theta_kernel_degree(int r, int64_t d, const Caps& caps)
{
    (void)caps;
    auto monos = poly::monomials_of_degree(r, d);
    auto targets = poly::monomials_of_degree(r, int64_t(1) << (d - 1));
    f2::Matrix images(0, static_cast<int>(targets.size()));
    for (const auto& m : monos) {
        PolyF2 im = poly::theta_action(PolyF2(r, {m}));
        images.append_row(poly_coords(im, targets));
    }
    return images.left_kernel();
}

f2::Matrix subset_reduction_kernel(int r, int64_t d)
{
    auto monos = poly::monomials_of_degree(r, d);
    // symbol index
    std::vector<SubsetTerm> symbols;
    for (uint64_t mask = 1; mask < (uint64_t(1) << r); ++mask)
        if (std::popcount(mask) <= d)
            symbols.push_back(SubsetTerm{mask, d});
    std::sort(symbols.begin(), symbols.end());
    f2::Matrix images(0, static_cast<int>(symbols.size()));
    for (const auto& m : monos) {
        SubsetAlgElt im = reduce_elem_abelian(PolyF2(r, {m}));
        std::vector<uint8_t> row(symbols.size(), 0);
        for (const auto& t : im.terms()) {
            auto it = std::lower_bound(symbols.begin(), symbols.end(), t);
            assert(it != symbols.end() && *it == t);
            row[it - symbols.begin()] ^= 1;
        }
        images.append_row(row);
    }
    return images.left_kernel();
}

// ---- OR / binomial ----

uint64_t or_op(uint64_t i, uint64_t j)
{
    return i | j;
}

mpz_class alpha(int64_t i, int64_t j, int64_t k)
{
    if (k < std::max(i, j) || k > i + j)
        return 0;
    mpz_class num, d1, d2, d3;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_fac_ui(d1.get_mpz_t(), static_cast<unsigned long>(k - i));
    mpz_fac_ui(d2.get_mpz_t(), static_cast<unsigned long>(k - j));
    mpz_fac_ui(d3.get_mpz_t(), static_cast<unsigned long>(i + j - k));
    return num / (d1 * d2 * d3);
}

bool kummer_parity(uint64_t n, uint64_t m)
{
    if (m > n)
        return false;
    return (m & ~n) == 0;
}

// ---- universal model ----

int64_t BOMonomial::degree() const
{
    int64_t d = 0;
    for (const auto& f : w)
        for (int j : f)
            d += j;
    return d;
}

std::string BOMonomial::str() const
{
    std::ostringstream os;
    bool any = false;
    for (size_t f = 0; f < w.size(); ++f)
        for (int j : w[f]) {
            if (any)
                os << " ";
            any = true;
            os << "w" << j << "(p" << (f + 1) << ")";
        }
    return any ? os.str() : "1";
}

int64_t ORMono::total_degree() const
{
    int64_t d = 0;
    for (const auto& [orv, deg] : factors)
        d += deg;
    return d;
}

ORMono bo_normal_form(const BOMonomial& m)
{
    ORMono out;
    for (const auto& f : m.w) {
        uint64_t orv = 0;
        int64_t deg = 0;
        for (int j : f) {
            if (j < 1)
                throw std::invalid_argument("w-index must be positive");
            orv |= static_cast<uint64_t>(j);
            deg += j;
        }
        out.factors.emplace_back(orv, deg);
    }
    return out;
}

bool bo_equal_mod_ideal(const BOMonomial& a, const BOMonomial& b)
{
    ORMono na = bo_normal_form(a), nb = bo_normal_form(b);
    if (na.total_degree() != nb.total_degree())
        return false;
    size_t n = std::max(na.factors.size(), nb.factors.size());
    na.factors.resize(n, {0, 0});
    nb.factors.resize(n, {0, 0});
    for (size_t f = 0; f < n; ++f)
        if (na.factors[f].first != nb.factors[f].first)
            return false;
    return true;
}

SubsetAlgElt embed_bo_subset(const BOMonomial& m, int M)
{
    int nf = static_cast<int>(m.w.size());
    if (nf * M > 62)
        throw std::invalid_argument("too many variables for the subset embedding");
    SubsetAlgElt acc = SubsetAlgElt::unit();
    for (int f = 0; f < nf; ++f) {
        for (int j : m.w[f]) {
            if (j > M)
                throw std::invalid_argument("embedding needs M >= every index");
            // sum over j-subsets of block f
            std::vector<SubsetTerm> terms;
            std::vector<int> subset;
            auto rec = [&](auto&& self, int start, int left) -> void {
                if (left == 0) {
                    uint64_t mask = 0;
                    for (int v : subset)
                        mask |= uint64_t(1) << (f * M + v);
                    terms.push_back(SubsetTerm{mask, j});
                    return;
                }
                for (int v = start; v <= M - left; ++v) {
                    subset.push_back(v);
                    self(self, v + 1, left - 1);
                    subset.pop_back();
                }
            };
            rec(rec, 0, j);
            acc = acc * SubsetAlgElt(std::move(terms));
        }
    }
    return acc;
}

bool verify_or_product_law(int i, int j, int M)
{
    BOMonomial a{{{i, j}}};  // w_i(p_1) w_j(p_1)
    SubsetAlgElt lhs = embed_bo_subset(a, M);
    // t_{i OR j, i+j} over the same block
    uint64_t k = or_op(static_cast<uint64_t>(i), static_cast<uint64_t>(j));
    std::vector<SubsetTerm> terms;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            uint64_t mask = 0;
            for (int v : subset)
                mask |= uint64_t(1) << v;
            terms.push_back(SubsetTerm{mask, i + j});
            return;
        }
        for (int v = start; v <= M - left; ++v) {
            subset.push_back(v);
            self(self, v + 1, left - 1);
            subset.pop_back();
        }
    };
    rec(rec, 0, static_cast<int>(k));
    return lhs == SubsetAlgElt(std::move(terms));
}

// ---- cyclic-4 model ----

namespace {

// Factor list for x^xe y^ye: x is an ordinary degree-1 class, y acts
// like the square of one.  The model relation x^2 = 0 is imposed by
// dropping result monomials with x-exponent >= 2; the ideal (x^2) is
// stable under the coaction, so this reduction computes the model
// action.
std::vector<std::pair<int, uint32_t>> c4_factors(int xe, int ye)
{
    std::vector<std::pair<int, uint32_t>> f;
    for (int c = 0; c < xe; ++c)
        f.emplace_back(0, 1);
    for (int c = 0; c < ye; ++c)
        f.emplace_back(1, 2);
    return f;
}

bool c4_reduce_nonzero(const PolyF2& p)
{
    for (const auto& m : p.terms())
        if (m.e[0] <= 1)
            return true;
    return false;
}

}  // namespace

C4Model::C4Model(int max_degree, const Caps& caps) : max_degree_(max_degree), caps_(caps)
{
    theta_kills_.assign(max_degree_ + 1, 0);
    theta_kills_[0] = 0;
    for (int d = 1; d <= max_degree_; ++d) {
        PolyF2 res = poly::theta_action_factors(d, 2, c4_factors(d % 2, d / 2));
        theta_kills_[d] = !c4_reduce_nonzero(res);
    }
}

bool C4Model::action_on_monomial(const SteenrodOp& op, int xe, int ye) const
{
    if (xe >= 2)
        return false;
    if (op.is_zero())
        return false;
    PolyF2 res = poly::steenrod_action_factors(op, 2, c4_factors(xe, ye), caps_);
    // op is homogeneous, so at most one monomial survives the x^2 = 0
    // reduction
    return c4_reduce_nonzero(res);
}

bool C4Model::theta_on_basis(int d) const
{
    if (d == 0)
        return true;
    return !theta_kills_.at(d);
}

bool C4Model::theta_on_monomial(int xe, int ye)
{
    if (xe >= 2)
        return false;
    int d = xe + 2 * ye;
    if (d == 0)
        return true;
    return c4_reduce_nonzero(poly::theta_action_factors(d, 2, c4_factors(xe, ye)));
}

bool C4Model::basis_in_ideal(int d) const
{
    if (d < 1)
        return false;
    return theta_kills_.at(d);
}

int C4Model::quotient_dim(int d) const
{
    if (d == 0)
        return 1;
    return basis_in_ideal(d) ? 0 : 1;
}

bool C4Model::ideal_is_xy_ideal() const
{
    for (int d = 1; d <= max_degree_; ++d) {
        bool in_xy_ideal = (d >= 3) && (d % 2 == 1);  // x y^k, k >= 1
        if (basis_in_ideal(d) != in_xy_ideal)
            return false;
    }
    return true;
}

// ---- dihedral model ----

std::string D4Model::MonoD4::str() const
{
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const char* name, uint32_t e) {
        if (!e)
            return;
        if (any)
            os << " ";
        any = true;
        os << name;
        if (e > 1)
            os << "^" << e;
    };
    emit("W1", p);
    emit("W2", q);
    emit("W", s);
    return any ? os.str() : "1";
}

D4Model::D4Model(int max_degree, const Caps& caps) : max_degree_(max_degree), caps_(caps)
{
    // the injectivity certificate is checked at degree 2^{d-1}; keep
    // those matrices small
    if (max_degree_ > 12)
        throw steenrod::cap_error("dihedral model capped at degree 12");
    build();
}

const std::vector<D4Model::MonoD4>& D4Model::basis(int d) const
{
    return basis_.at(d);
}

std::optional<D4Model::MonoD4> D4Model::mul(const MonoD4& a, const MonoD4& b)
{
    MonoD4 m{a.p + b.p, a.q + b.q, a.s + b.s};
    if (m.p && m.q)
        return std::nullopt;  // W1 W2 = 0
    return m;
}

D4Model::Restriction D4Model::restrict(const MonoD4& m) const
{
    Restriction r{PolyF2::zero(2), PolyF2::zero(2), false};
    PolyF2 apb = PolyF2::var(2, 0) + PolyF2::var(2, 1);
    PolyF2 ab = PolyF2::var(2, 0) * PolyF2::var(2, 1);
    if (m.q == 0)
        r.klein1 = apb.pow(m.p) * ab.pow(m.s);
    if (m.p == 0)
        r.klein2 = apb.pow(m.q) * ab.pow(m.s);
    r.c4_nonzero = (m.p + m.q <= 1);  // W1, W2 |-> x and x^2 = 0
    return r;
}

void D4Model::build()
{
    basis_.resize(max_degree_ + 1);
    for (int d = 0; d <= max_degree_; ++d) {
        std::vector<MonoD4> b;
        for (uint32_t s = 0; 2 * s <= static_cast<uint32_t>(d); ++s) {
            uint32_t rest = d - 2 * s;
            if (rest == 0) {
                b.push_back(MonoD4{0, 0, s});
            }
            else {
                b.push_back(MonoD4{rest, 0, s});
                b.push_back(MonoD4{0, rest, s});
            }
        }
        std::sort(b.begin(), b.end());
        basis_[d] = std::move(b);
    }

    ideal_.resize(max_degree_ + 1);
    quot_basis_.resize(max_degree_ + 1);
    pivot_cols_.resize(max_degree_ + 1);

    // degree 0: nothing in the ideal
    ideal_[0] = f2::Matrix(0, 1);
    quot_basis_[0] = {0};

    for (int d = 1; d <= max_degree_; ++d) {
        int64_t target = int64_t(1) << (d - 1);
        if (!restriction_injective(d))
            throw std::logic_error("restriction not injective in degree " + std::to_string(d));
        if (!restriction_injective(static_cast<int>(target)))
            throw std::logic_error("restriction not injective in degree " +
                                   std::to_string(target));

        auto tmonos = poly::monomials_of_degree(2, target);
        int tcols = static_cast<int>(2 * tmonos.size()) + 1;
        f2::Matrix images(0, tcols);
        for (const auto& m : basis_[d]) {
            Restriction r = restrict(m);
            PolyF2 th1 = poly::theta_action(r.klein1);
            PolyF2 th2 = poly::theta_action(r.klein2);
            bool th3 = r.c4_nonzero &&
                       C4Model::theta_on_monomial(static_cast<int>(m.p + m.q),
                                                  static_cast<int>(m.s));
            std::vector<uint8_t> row(tcols, 0);
            for (const auto& t : th1.terms())
                row[mono_index(tmonos, t)] ^= 1;
            for (const auto& t : th2.terms())
                row[tmonos.size() + mono_index(tmonos, t)] ^= 1;
            if (th3)
                row[2 * tmonos.size()] ^= 1;
            images.append_row(row);
        }
        ideal_[d] = images.left_kernel();
        pivot_cols_[d] = ideal_[d].rref();
        std::vector<int> quot;
        std::vector<bool> is_pivot(basis_[d].size(), false);
        for (int c : pivot_cols_[d])
            is_pivot[c] = true;
        for (size_t c = 0; c < basis_[d].size(); ++c)
            if (!is_pivot[c])
                quot.push_back(static_cast<int>(c));
        quot_basis_[d] = std::move(quot);
    }
}

const f2::Matrix& D4Model::ideal(int d) const
{
    return ideal_.at(d);
}

int D4Model::quotient_dim(int d) const
{
    if (d == 0)
        return 1;
    return dim(d) - ideal_.at(d).rank();
}

const std::vector<int>& D4Model::quotient_basis(int d) const
{
    return quot_basis_.at(d);
}

std::vector<uint8_t> D4Model::reduce_to_quotient(std::vector<uint8_t> coords, int d) const
{
    const f2::Matrix& J = ideal_.at(d);
    const auto& pivots = pivot_cols_.at(d);
    for (size_t k = 0; k < pivots.size(); ++k) {
        if (coords[pivots[k]]) {
            for (int c = 0; c < J.cols(); ++c)
                coords[c] ^= J.get(static_cast<int>(k), c);
        }
    }
    std::vector<uint8_t> out;
    out.reserve(quot_basis_.at(d).size());
    for (int c : quot_basis_.at(d))
        out.push_back(coords[c]);
    return out;
}

bool D4Model::restriction_injective(int d) const
{
    auto monos = poly::monomials_of_degree(2, d);
    std::vector<MonoD4> b;
    for (uint32_t s = 0; 2 * s <= static_cast<uint32_t>(d); ++s) {
        uint32_t rest = d - 2 * s;
        if (rest == 0) {
            b.push_back(MonoD4{0, 0, s});
        }
        else {
            b.push_back(MonoD4{rest, 0, s});
            b.push_back(MonoD4{0, rest, s});
        }
    }
    int cols = static_cast<int>(2 * monos.size()) + 1;
    f2::Matrix images(0, cols);
    for (const auto& m : b) {
        Restriction r = restrict(m);
        std::vector<uint8_t> row(cols, 0);
        for (const auto& t : r.klein1.terms())
            row[mono_index(monos, t)] ^= 1;
        for (const auto& t : r.klein2.terms())
            row[monos.size() + mono_index(monos, t)] ^= 1;
        if (r.c4_nonzero)
            row[2 * monos.size()] ^= 1;
        images.append_row(row);
    }
    return images.rank() == static_cast<int>(b.size());
}

bool D4Model::ideal_matches_generators() const
{
    for (int d = 1; d <= max_degree_; ++d) {
        // span of W1 W and W2 W times the degree-(d-3) basis
        f2::Matrix span(0, dim(d));
        if (d >= 3) {
            for (const MonoD4& g : {MonoD4{1, 0, 1}, MonoD4{0, 1, 1}}) {
                for (const auto& m : basis_[d - 3]) {
                    auto prod = mul(g, m);
                    if (!prod)
                        continue;
                    std::vector<uint8_t> row(dim(d), 0);
                    auto it = std::lower_bound(basis_[d].begin(), basis_[d].end(), *prod);
                    assert(it != basis_[d].end() && *it == *prod);
                    row[it - basis_[d].begin()] ^= 1;
                    span.append_row(row);
                }
            }
        }
        if (!span.same_row_space(ideal_[d]))
            return false;
    }
    return true;
}

bool dims_eventually_periodic(const std::vector<int>& dims, int max_period, int tail_start)
{
    int n = static_cast<int>(dims.size());
    for (int p = 1; p <= max_period; ++p) {
        bool ok = true;
        for (int d = tail_start; d + p < n; ++d)
            if (dims[d] != dims[d + p]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    }
    return false;
}

}  // namespace grw::swq
