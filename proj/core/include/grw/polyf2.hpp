#pragma once

// F2 polynomial algebras on degree-1 variables t_1,...,t_r, the
// Steenrod action through the dual coaction t |-> sum t^{2^i} (x) xi_i,
// total Stiefel-Whitney series of virtual sums of line classes, and
// the distinguished degree-raising sums used throughout.

#include "grw/steenrod.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grw::poly {

// Exponent vector of fixed length r; degree = exponent sum.
struct Mono {
    std::vector<uint32_t> e;

    Mono() = default;
    explicit Mono(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    int64_t degree() const;
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator<(const Mono& o) const { return e < o.e; }  // lex
    std::string str() const;  // "t1^2 t3"
};

// Set of monomials (F2 coefficients), sorted.
class PolyF2 {
public:
    PolyF2() = default;
    explicit PolyF2(int nvars) : nvars_(nvars) {}
    PolyF2(int nvars, std::vector<Mono> terms);

    static PolyF2 zero(int nvars) { return PolyF2(nvars); }
    static PolyF2 one(int nvars);
    static PolyF2 var(int nvars, int i);  // t_{i+1}, 0-based index

    int nvars() const { return nvars_; }
    const std::vector<Mono>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool homogeneous() const;
    int64_t degree() const;           // max term degree; 0 for the zero poly
    PolyF2 component(int64_t d) const;  // homogeneous piece

    PolyF2& operator+=(const PolyF2& o);
    friend PolyF2 operator+(PolyF2 a, const PolyF2& b) { return a += b; }
    PolyF2 operator*(const PolyF2& o) const;
    PolyF2 pow(uint32_t k) const;
    bool operator==(const PolyF2& o) const
    {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Substitute a polynomial for variable v (degree-1 replacements in
    // practice, but any polynomial works).
    PolyF2 subst(int v, const PolyF2& repl) const;

    std::string str() const;

private:
    int nvars_ = 0;
    std::vector<Mono> terms_;
    void normalize();
};

// Sum of the variables indexed by `vars` (possibly empty: zero).
PolyF2 linear_form(int nvars, const std::vector<int>& vars);

// All monomials of degree d in r variables (lex order).
std::vector<Mono> monomials_of_degree(int r, int64_t d);

// ---- Steenrod action ----

// Action of a homogeneous op on p, computed from the coaction: each
// degree-1 factor of a monomial contributes t^{2^i} (x) xi_i, the dual
// components are collected and paired against op (Sq(R) pairs to 1
// with xi^R only).  Linear in both arguments.
PolyF2 steenrod_action(const steenrod::SteenrodOp& op, const PolyF2& p,
                       const steenrod::Caps& caps = {});

// Same coaction enumeration for one monomial given as a factor list
// (variable index, weight).  Weight-1 factors are ordinary degree-1
// classes; a weight-w factor behaves as the w-th power of a degree-1
// class (its dual contribution is xi_i^w and its exponent jumps by
// 2^i).  Used by cohomology models with polynomial generators in
// degree 2.
PolyF2 steenrod_action_factors(const steenrod::SteenrodOp& op, int nvars,
                               const std::vector<std::pair<int, uint32_t>>& factors,
                               const steenrod::Caps& caps = {});

// Action of theta_n without materializing its Milnor terms: theta_n is
// the full basis sum in its degree, so every dual monomial of degree
// 2^{n-1} - n pairs to 1 and the membership test degenerates to a
// degree check.  Level choices are enumerated as one multiset per
// (variable, weight) group with the multinomial ordered-tuple count
// reduced mod 2 by the binary-carry criterion, which keeps high
// degrees tractable.  Every factor list of weighted degree n is
// accepted.
PolyF2 theta_action_factors(int n, int nvars,
                            const std::vector<std::pair<int, uint32_t>>& factors);

// theta_{deg p}(p) for homogeneous p; agrees with
// steenrod_action(theta(n), p) wherever the latter is computable.
PolyF2 theta_action(const PolyF2& p);

// sum over n-tuples (r_1,...,r_n) with 2^{r_1}+...+2^{r_n} = 2^{n-1}
// of t_{v_1}^{2^{r_1}} ... t_{v_n}^{2^{r_n}}, accumulated with exact
// F2 parity over ordered tuples.  Variables may repeat.
PolyF2 theta_direct(int n, int nvars, const std::vector<int>& vars);
PolyF2 theta_direct(int n);  // vars = t_1..t_n, n variables

// prod over odd k <= n of m_k, where m_k is the product of all sums
// t_{i_1}+...+t_{i_k} over k-subsets of {1..n}; total degree 2^{n-1}.
PolyF2 mk_product(int n, int cap = 7);

// ---- total Stiefel-Whitney series ----

// Coefficients w_0..w_D with w_0 = 1; each w_d homogeneous of degree d.
class TotalSWSeries {
public:
    TotalSWSeries(int nvars, int64_t truncation);

    int nvars() const { return nvars_; }
    int64_t truncation() const { return trunc_; }
    const PolyF2& w(int64_t i) const;

    static TotalSWSeries one(int nvars, int64_t D);
    // 1 + l for a linear form l (a line class).
    static TotalSWSeries line(const PolyF2& l, int64_t D);

    TotalSWSeries operator*(const TotalSWSeries& o) const;
    TotalSWSeries inverse() const;  // w_0 = 1 makes this well defined

    void set_w(int64_t i, PolyF2 v);

private:
    int nvars_;
    int64_t trunc_;
    std::vector<PolyF2> w_;
};

// prod (1 + l+) * (prod (1 + l-))^{-1} truncated at D; entries are
// linear forms (degree <= 1, possibly zero).
TotalSWSeries sw_virtual(const std::vector<PolyF2>& plus, const std::vector<PolyF2>& minus,
                         int64_t D);

// Line classes of E^even and E^odd for the product of (L_i - 1),
// i = 1..n, oriented by the sign (-1)^n; first = plus, second = minus.
std::pair<std::vector<PolyF2>, std::vector<PolyF2>> product_line_expansion(int n);

// Sq^i applied to the elementary symmetric polynomial e_j(t_1..t_m).
PolyF2 sq_on_elementary_symmetric(int64_t i, int j, int m,
                                  const steenrod::Caps& caps = {});

// e_j(t_1..t_m)
PolyF2 elementary_symmetric(int j, int m);

}  // namespace grw::poly
