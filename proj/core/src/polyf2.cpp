#include "grw/polyf2.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace grw::poly {

int64_t Mono::degree() const
{
    int64_t d = 0;
    for (uint32_t v : e)
        d += v;
    return d;
}

std::string Mono::str() const
{
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i])
            continue;
        if (any)
            os << " ";
        any = true;
        os << "t" << (i + 1);
        if (e[i] > 1)
            os << "^" << e[i];
    }
    return any ? os.str() : "1";
}

PolyF2::PolyF2(int nvars, std::vector<Mono> terms) : nvars_(nvars), terms_(std::move(terms))
{
    for (const auto& m : terms_)
        if (static_cast<int>(m.e.size()) != nvars_)
            throw std::invalid_argument("monomial arity mismatch");
    normalize();
}

void PolyF2::normalize()
{
    std::sort(terms_.begin(), terms_.end());
    std::vector<Mono> out;
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

PolyF2 PolyF2::one(int nvars)
{
    return PolyF2(nvars, {Mono(std::vector<uint32_t>(nvars, 0))});
}

PolyF2 PolyF2::var(int nvars, int i)
{
    std::vector<uint32_t> e(nvars, 0);
    e.at(i) = 1;
    return PolyF2(nvars, {Mono(std::move(e))});
}

bool PolyF2::homogeneous() const
{
    if (terms_.empty())
        return true;
    int64_t d = terms_[0].degree();
    for (const auto& m : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

int64_t PolyF2::degree() const
{
    int64_t d = 0;
    for (const auto& m : terms_)
        d = std::max(d, m.degree());
    return d;
}

PolyF2 PolyF2::component(int64_t d) const
{
    std::vector<Mono> out;
    for (const auto& m : terms_)
        if (m.degree() == d)
            out.push_back(m);
    return PolyF2(nvars_, std::move(out));
}

PolyF2& PolyF2::operator+=(const PolyF2& o)
{
    if (nvars_ == 0 && terms_.empty())
        nvars_ = o.nvars_;
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("adding polynomials of different arity");
    std::vector<Mono> merged;
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

PolyF2 PolyF2::operator*(const PolyF2& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("multiplying polynomials of different arity");
    std::map<Mono, bool> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Mono m = a;
            for (int k = 0; k < nvars_; ++k)
                m.e[k] += b.e[k];
            auto [it, fresh] = acc.emplace(std::move(m), true);
            if (!fresh)
                it->second = !it->second;
        }
    std::vector<Mono> out;
    for (auto& [m, odd] : acc)
        if (odd)
            out.push_back(m);
    PolyF2 r(nvars_);
    r.terms_ = std::move(out);  // already sorted and unique
    return r;
}

PolyF2 PolyF2::pow(uint32_t k) const
{
    PolyF2 acc = one(nvars_);
    PolyF2 base = *this;
    while (k) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

PolyF2 PolyF2::subst(int v, const PolyF2& repl) const
{
    if (repl.nvars_ != nvars_)
        throw std::invalid_argument("substitution arity mismatch");
    PolyF2 out(nvars_);
    for (const auto& m : terms_) {
        Mono rest = m;
        uint32_t k = rest.e[v];
        rest.e[v] = 0;
        PolyF2 term(nvars_, {rest});
        out += term * repl.pow(k);
    }
    return out;
}

std::string PolyF2::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            os << " + ";
        os << terms_[i].str();
    }
    return os.str();
}

PolyF2 linear_form(int nvars, const std::vector<int>& vars)
{
    PolyF2 out(nvars);
    for (int v : vars)
        out += PolyF2::var(nvars, v);
    return out;
}

std::vector<Mono> monomials_of_degree(int r, int64_t d)
{
    std::vector<Mono> out;
    std::vector<uint32_t> cur(r, 0);
    auto rec = [&](auto&& self, int i, int64_t rem) -> void {
        if (i == r - 1) {
            cur[i] = static_cast<uint32_t>(rem);
            out.emplace_back(cur);
            return;
        }
        for (int64_t v = 0; v <= rem; ++v) {
            cur[i] = static_cast<uint32_t>(v);
            self(self, i + 1, rem - v);
        }
    };
    if (r == 0) {
        if (d == 0)
            out.emplace_back(std::vector<uint32_t>{});
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Steenrod action ----

namespace {

// Shared enumeration: each factor (var, w) picks a level i >= 0,
// raising its variable exponent by 2^i and the dual exponent of xi_i
// by w.  Contributions whose dual monomial lies in `op` toggle the
// resulting polynomial monomial.  Ordered choices are enumerated
// one factor at a time, so equal tuples cancel with exact F2 parity.
struct ActionEnum {
    int nvars;
    int64_t target;  // total degree the dual monomial must reach
    const std::vector<std::pair<int, uint32_t>>* factors;
    std::map<std::vector<int64_t>, bool>* op_terms;  // exponent vector -> present
    std::map<Mono, bool> acc;

    std::vector<uint32_t> cur_exp;
    std::vector<int64_t> cur_dual;
    std::vector<int64_t> suffix_cap;  // max dual degree the factors f.. can add

    void run()
    {
        cur_exp.assign(nvars, 0);
        cur_dual.clear();
        suffix_cap.assign(factors->size() + 1, 0);
        for (size_t f = factors->size(); f-- > 0;) {
            int64_t w = (*factors)[f].second;
            int i = 0;  // largest level with w*(2^i - 1) <= target
            while (w * ((int64_t(1) << (i + 1)) - 1) <= target)
                ++i;
            suffix_cap[f] = suffix_cap[f + 1] + w * ((int64_t(1) << i) - 1);
        }
        step(0, 0);
    }

    void step(size_t f, int64_t added)
    {
        if (added > target || added + suffix_cap[f] < target)
            return;
        if (f == factors->size()) {
            if (added != target)
                return;
            std::vector<int64_t> key = cur_dual;
            while (!key.empty() && key.back() == 0)
                key.pop_back();
            auto it = op_terms->find(key);
            if (it == op_terms->end())
                return;
            Mono m(cur_exp);
            auto [jt, fresh] = acc.emplace(std::move(m), true);
            if (!fresh)
                jt->second = !jt->second;
            return;
        }
        auto [v, w] = (*factors)[f];
        // level i contributes w * (2^i - 1) to the dual degree
        for (int i = 0;; ++i) {
            int64_t gain = int64_t(w) * ((int64_t(1) << i) - 1);
            if (added + gain > target)
                break;
            cur_exp[v] += uint32_t(1) << i;
            if (i > 0) {
                if (static_cast<int>(cur_dual.size()) < i)
                    cur_dual.resize(i, 0);
                cur_dual[i - 1] += w;
            }
            step(f + 1, added + gain);
            if (i > 0)
                cur_dual[i - 1] -= w;
            cur_exp[v] -= uint32_t(1) << i;
        }
    }
};

PolyF2 action_impl(const steenrod::SteenrodOp& op, int nvars,
                   const std::vector<std::pair<int, uint32_t>>& factors,
                   const steenrod::Caps& caps)
{
    if (op.is_zero())
        return PolyF2::zero(nvars);
    if (!op.homogeneous())
        throw std::invalid_argument("steenrod_action needs a homogeneous operation");
    int64_t d_op = op.degree();
    caps.check(d_op, "steenrod_action");
    std::map<std::vector<int64_t>, bool> op_terms;
    for (const auto& t : op.terms())
        op_terms[t.r] = true;

    ActionEnum en;
    en.nvars = nvars;
    en.target = d_op;
    en.factors = &factors;
    en.op_terms = &op_terms;
    en.run();

    std::vector<Mono> out;
    for (auto& [m, odd] : en.acc)
        if (odd)
            out.push_back(m);
    PolyF2 r(nvars, std::move(out));
    return r;
}

}  // namespace

PolyF2 steenrod_action_factors(const steenrod::SteenrodOp& op, int nvars,
                               const std::vector<std::pair<int, uint32_t>>& factors,
                               const steenrod::Caps& caps)
{
    return action_impl(op, nvars, factors, caps);
}

PolyF2 steenrod_action(const steenrod::SteenrodOp& op, const PolyF2& p,
                       const steenrod::Caps& caps)
{
    PolyF2 out(p.nvars());
    for (const auto& m : p.terms()) {
        std::vector<std::pair<int, uint32_t>> factors;
        for (int v = 0; v < p.nvars(); ++v)
            for (uint32_t c = 0; c < m.e[v]; ++c)
                factors.emplace_back(v, 1);
        out += action_impl(op, p.nvars(), factors, caps);
    }
    return out;
}

namespace {

// Enumeration for the full-sum theta action.  Factors are grouped by
// (variable, weight); each group picks a level multiset, weighted by
// the parity of the number of ordered arrangements.
struct ThetaEnum {
    int nvars;
    int64_t target;  // dual degree 2^{n-1} - n
    struct Group {
        int var;
        int64_t weight;
        int64_t copies;
    };
    std::vector<Group> groups;
    std::map<Mono, bool> acc;

    std::vector<uint32_t> cur_exp;

    void run()
    {
        cur_exp.assign(nvars, 0);
        group_step(0, 0);
    }

    void group_step(size_t g, int64_t added)
    {
        if (added > target)
            return;
        if (g == groups.size()) {
            if (added != target)
                return;
            auto [it, fresh] = acc.emplace(Mono(cur_exp), true);
            if (!fresh)
                it->second = !it->second;
            return;
        }
        const Group& gr = groups[g];
        int lmax = 0;
        while (gr.weight * ((int64_t(1) << (lmax + 1)) - 1) <= target - added)
            ++lmax;
        level_step(g, added, lmax, gr.copies, 0, 0);
    }

    // Distribute `left` copies of group g over levels lmax..0, keeping
    // the running OR of the multiplicities: the multinomial number of
    // orderings is odd exactly when the multiplicities add carry-free.
    void level_step(size_t g, int64_t added, int level, int64_t left, int64_t mult_or,
                    int64_t exp_gain)
    {
        const Group& gr = groups[g];
        if (left == 0) {
            cur_exp[gr.var] += static_cast<uint32_t>(exp_gain);
            group_step(g + 1, added);
            cur_exp[gr.var] -= static_cast<uint32_t>(exp_gain);
            return;
        }
        if (level < 0)
            return;
        int64_t unit_gain = gr.weight * ((int64_t(1) << level) - 1);
        if (level == 0) {
            // remaining copies all at level 0 (no dual contribution)
            if (mult_or & left)
                return;  // carry: even count of orderings
            cur_exp[gr.var] += static_cast<uint32_t>(exp_gain + left);
            group_step(g + 1, added);
            cur_exp[gr.var] -= static_cast<uint32_t>(exp_gain + left);
            return;
        }
        for (int64_t m = 0; m <= left && added + m * unit_gain <= target; ++m) {
            if (m && (mult_or & m))
                continue;  // even multinomial
            level_step(g, added + m * unit_gain, level - 1, left - m,
                       m ? (mult_or | m) : mult_or, exp_gain + m * (int64_t(1) << level));
        }
    }
};

}  // namespace

PolyF2 theta_action_factors(int n, int nvars,
                            const std::vector<std::pair<int, uint32_t>>& factors)
{
    if (n < 1)
        throw std::invalid_argument("theta_action needs n >= 1");
    if (n > 62)
        throw steenrod::cap_error("theta index out of range");
    int64_t wsum = 0;
    for (auto [v, w] : factors)
        wsum += w;
    if (wsum != n)
        throw std::invalid_argument("theta_action: weighted degree mismatch");

    ThetaEnum en;
    en.nvars = nvars;
    en.target = (int64_t(1) << (n - 1)) - n;
    std::map<std::pair<int, uint32_t>, int64_t> counts;
    for (auto f : factors)
        ++counts[f];
    for (auto& [key, c] : counts)
        en.groups.push_back({key.first, key.second, c});
    en.run();

    std::vector<Mono> out;
    for (auto& [m, odd] : en.acc)
        if (odd)
            out.push_back(m);
    return PolyF2(nvars, std::move(out));
}

PolyF2 theta_action(const PolyF2& p)
{
    if (p.is_zero())
        return p;
    if (!p.homogeneous())
        throw std::invalid_argument("theta_action needs a homogeneous class");
    int64_t n = p.degree();
    if (n < 1)
        throw std::invalid_argument("theta_action needs positive degree");
    PolyF2 out(p.nvars());
    for (const auto& m : p.terms()) {
        // a variable with exponent e is e independent degree-1 factors
        std::vector<std::pair<int, uint32_t>> units;
        for (int v = 0; v < p.nvars(); ++v)
            for (uint32_t c = 0; c < m.e[v]; ++c)
                units.emplace_back(v, 1);
        out += theta_action_factors(static_cast<int>(n), p.nvars(), units);
    }
    return out;
}

PolyF2 theta_direct(int n, int nvars, const std::vector<int>& vars)
{
    if (n < 1)
        throw std::invalid_argument("theta_direct needs n >= 1");
    if (static_cast<int>(vars.size()) != n)
        throw std::invalid_argument("theta_direct needs n variables");
    int64_t target = int64_t(1) << (n - 1);

    std::map<Mono, bool> acc;
    std::vector<uint32_t> exp(nvars, 0);
    auto rec = [&](auto&& self, int k, int64_t rem) -> void {
        if (k == n) {
            if (rem != 0)
                return;
            auto [it, fresh] = acc.emplace(Mono(exp), true);
            if (!fresh)
                it->second = !it->second;
            return;
        }
        int64_t left = n - 1 - k;  // remaining factors contribute >= 1 each
        for (int64_t p = 1; p <= rem - left; p <<= 1) {
            exp[vars[k]] += static_cast<uint32_t>(p);
            self(self, k + 1, rem - p);
            exp[vars[k]] -= static_cast<uint32_t>(p);
        }
    };
    rec(rec, 0, target);

    std::vector<Mono> out;
    for (auto& [m, odd] : acc)
        if (odd)
            out.push_back(m);
    return PolyF2(nvars, std::move(out));
}

PolyF2 theta_direct(int n)
{
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i)
        vars[i] = i;
    return theta_direct(n, n, vars);
}

PolyF2 mk_product(int n, int cap)
{
    if (n < 1)
        throw std::invalid_argument("mk_product needs n >= 1");
    if (n > cap)
        throw steenrod::cap_error("mk_product: n exceeds cap");
    PolyF2 acc = PolyF2::one(n);
    // product over odd k of all (t_{i_1} + ... + t_{i_k}), |S| = k
    std::vector<int> subset;
    auto over_subsets = [&](auto&& self, int start, int k) -> void {
        if (k == 0) {
            acc = acc * linear_form(n, subset);
            return;
        }
        for (int i = start; i <= n - k; ++i) {
            subset.push_back(i);
            self(self, i + 1, k - 1);
            subset.pop_back();
        }
    };
    for (int k = 1; k <= n; k += 2)
        over_subsets(over_subsets, 0, k);
    return acc;
}

// ---- total Stiefel-Whitney series ----

TotalSWSeries::TotalSWSeries(int nvars, int64_t truncation)
    : nvars_(nvars), trunc_(truncation)
{
    if (truncation < 1)
        throw std::invalid_argument("series truncation must be >= 1");
    w_.assign(static_cast<size_t>(trunc_) + 1, PolyF2::zero(nvars_));
    w_[0] = PolyF2::one(nvars_);
}

const PolyF2& TotalSWSeries::w(int64_t i) const
{
    if (i < 0 || i > trunc_)
        throw std::out_of_range("series coefficient out of range");
    return w_[static_cast<size_t>(i)];
}

void TotalSWSeries::set_w(int64_t i, PolyF2 v)
{
    w_.at(static_cast<size_t>(i)) = std::move(v);
}

TotalSWSeries TotalSWSeries::one(int nvars, int64_t D)
{
    return TotalSWSeries(nvars, D);
}

TotalSWSeries TotalSWSeries::line(const PolyF2& l, int64_t D)
{
    TotalSWSeries s(l.nvars(), D);
    if (!l.is_zero()) {
        if (l.degree() != 1 || !l.homogeneous())
            throw std::invalid_argument("line class must be linear");
        if (D >= 1)
            s.set_w(1, l);
    }
    return s;
}

TotalSWSeries TotalSWSeries::operator*(const TotalSWSeries& o) const
{
    if (nvars_ != o.nvars_ || trunc_ != o.trunc_)
        throw std::invalid_argument("series mismatch");
    TotalSWSeries out(nvars_, trunc_);
    for (int64_t d = 0; d <= trunc_; ++d) {
        PolyF2 acc(nvars_);
        for (int64_t i = 0; i <= d; ++i)
            acc += w_[i] * o.w_[d - i];
        out.set_w(d, std::move(acc));
    }
    return out;
}

TotalSWSeries TotalSWSeries::inverse() const
{
    // v_0 = 1, v_d = sum_{i=1}^{d} w_i v_{d-i} over F2
    TotalSWSeries out(nvars_, trunc_);
    for (int64_t d = 1; d <= trunc_; ++d) {
        PolyF2 acc(nvars_);
        for (int64_t i = 1; i <= d; ++i)
            acc += w_[i] * out.w_[d - i];
        out.set_w(d, std::move(acc));
    }
    return out;
}

TotalSWSeries sw_virtual(const std::vector<PolyF2>& plus, const std::vector<PolyF2>& minus,
                         int64_t D)
{
    int nvars = 0;
    for (const auto& l : plus)
        nvars = std::max(nvars, l.nvars());
    for (const auto& l : minus)
        nvars = std::max(nvars, l.nvars());
    TotalSWSeries acc = TotalSWSeries::one(nvars, D);
    for (const auto& l : plus)
        acc = acc * TotalSWSeries::line(l, D);
    TotalSWSeries den = TotalSWSeries::one(nvars, D);
    for (const auto& l : minus)
        den = den * TotalSWSeries::line(l, D);
    return acc * den.inverse();
}

std::pair<std::vector<PolyF2>, std::vector<PolyF2>> product_line_expansion(int n)
{
    if (n < 1)
        throw std::invalid_argument("product_line_expansion needs n >= 1");
    std::vector<PolyF2> even, odd;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (mask & (uint32_t(1) << i))
                vars.push_back(i);
        PolyF2 l = linear_form(n, vars);
        if (vars.size() % 2 == 0)
            even.push_back(std::move(l));
        else
            odd.push_back(std::move(l));
    }
    // rho = (-1)^n (E^even - E^odd)
    if (n % 2 == 0)
        return {std::move(even), std::move(odd)};
    return {std::move(odd), std::move(even)};
}

PolyF2 elementary_symmetric(int j, int m)
{
    if (j < 0 || j > m)
        throw std::invalid_argument("elementary_symmetric index out of range");
    std::vector<Mono> terms;
    std::vector<uint32_t> exp(m, 0);
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start, int k) -> void {
        if (k == 0) {
            for (int v : subset)
                exp[v] = 1;
            terms.emplace_back(exp);
            for (int v : subset)
                exp[v] = 0;
            return;
        }
        for (int i = start; i <= m - k; ++i) {
            subset.push_back(i);
            self(self, i + 1, k - 1);
            subset.pop_back();
        }
    };
    rec(rec, 0, j);
    return PolyF2(m, std::move(terms));
}

PolyF2 sq_on_elementary_symmetric(int64_t i, int j, int m, const steenrod::Caps& caps)
{
    return steenrod_action(steenrod::SteenrodOp::sq(i), elementary_symmetric(j, m), caps);
}

}  // namespace grw::poly
