#pragma once

// The canonical ideal and its quotient in computable cohomology
// models: elementary abelian 2-groups (subset algebra), the universal
// N-fold classifying-space model (OR-monoid normal form), and the
// cyclic-4 / dihedral-8 models.  Plus the binomial/OR combinatorics
// behind the universal relations.

#include "grw/f2matrix.hpp"
#include "grw/polyf2.hpp"
#include "grw/steenrod.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grw::swq {

// ---- subset algebra ----

// Basis symbol t_{I,n}: I a nonempty variable set with |I| <= n; the
// unit is (mask 0, degree 0).  Product: t_{I,n} t_{J,m} = t_{IuJ,n+m}.
struct SubsetTerm {
    uint64_t mask = 0;
    int64_t deg = 0;

    bool operator==(const SubsetTerm& o) const { return mask == o.mask && deg == o.deg; }
    bool operator<(const SubsetTerm& o) const
    {
        return deg != o.deg ? deg < o.deg : mask < o.mask;
    }
};

class SubsetAlgElt {
public:
    SubsetAlgElt() = default;
    explicit SubsetAlgElt(std::vector<SubsetTerm> terms);

    static SubsetAlgElt unit() { return SubsetAlgElt({SubsetTerm{0, 0}}); }
    static SubsetAlgElt symbol(uint64_t mask, int64_t deg);

    const std::vector<SubsetTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SubsetAlgElt& operator+=(const SubsetAlgElt& o);
    friend SubsetAlgElt operator+(SubsetAlgElt a, const SubsetAlgElt& b) { return a += b; }
    SubsetAlgElt operator*(const SubsetAlgElt& o) const;
    bool operator==(const SubsetAlgElt& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::vector<SubsetTerm> terms_;
};

// monomial |-> t_{support, degree}, extended linearly.  Realizes the
// quotient of F2[t_1..t_r] by the canonical ideal.
SubsetAlgElt reduce_elem_abelian(const poly::PolyF2& p);

// Number of symbols of degree n over r variables:
// #{nonempty S, |S| <= n}, and 1 for n = 0.
int64_t subset_algebra_dim(int r, int64_t n);

// ---- degreewise ideal linear algebra over F2[t_1..t_r] ----

// theta_{|p|}(p) == 0?  p homogeneous of positive degree.
bool ideal_member_theta(const poly::PolyF2& p, const steenrod::Caps& caps = {});

// Row basis (coordinates over monomials_of_degree(r, d)) of the
// degree-d piece of the ideal generated by `gens`.
f2::Matrix ideal_span_degree(const std::vector<poly::PolyF2>& gens, int64_t d, int r);

// Kernel of theta_d on the degree-d part of F2[t_1..t_r], as rows over
// monomials_of_degree(r, d).
f2::Matrix theta_kernel_degree(int r, int64_t d, const steenrod::Caps& caps = {});

// Kernel of reduce_elem_abelian on the degree-d part, same coordinates.
f2::Matrix subset_reduction_kernel(int r, int64_t d);

// ---- OR / binomial combinatorics ----

uint64_t or_op(uint64_t i, uint64_t j);

// Number of ways to write a k-set as I u J with |I| = i, |J| = j:
// k!/((k-i)!(k-j)!(i+j-k)!) for max(i,j) <= k <= i+j, else 0.
mpz_class alpha(int64_t i, int64_t j, int64_t k);

// C(n,m) mod 2 by the digit criterion (supp(m) inside supp(n)).
bool kummer_parity(uint64_t n, uint64_t m);

// ---- universal model on N bundle factors ----

// A monomial in the generalized classes w_j(p_f): per factor f, the
// multiset of indices j.
struct BOMonomial {
    std::vector<std::vector<int>> w;

    int64_t degree() const;
    std::string str() const;
};

// Normal form under the defining relations: every w_j expands into
// classes w_{2^k}, and two monomials agree modulo the ideal exactly
// when their total degrees agree and they involve the same variable
// set, i.e. the same per-factor OR of indices.
struct ORMono {
    std::vector<std::pair<uint64_t, int64_t>> factors;  // (or of j's, sum of j's)

    int64_t total_degree() const;
    bool operator==(const ORMono& o) const = default;
};

ORMono bo_normal_form(const BOMonomial& m);
bool bo_equal_mod_ideal(const BOMonomial& a, const BOMonomial& b);

// Image of a BOMonomial in the subset algebra, each factor on its own
// block of M variables: w_j(p_f) |-> sum over j-subsets of block f.
SubsetAlgElt embed_bo_subset(const BOMonomial& m, int M);

// t_{i,i} t_{j,j} == t_{i OR j, i+j} after expansion over M variables.
bool verify_or_product_law(int i, int j, int M);

// ---- cyclic-4 cohomology model ----

// F2[x,y]/(x^2) with |x| = 1, |y| = 2; Sq^1 x = 0, Sq^1 y = 0,
// Sq^2 y = y^2.  Every graded piece is one-dimensional with basis
// x^(d mod 2) y^(d div 2).
class C4Model {
public:
    explicit C4Model(int max_degree, const steenrod::Caps& caps = {});

    int max_degree() const { return max_degree_; }
    int dim(int d) const { return d >= 0 ? 1 : 0; }

    // theta_d of the degree-d basis monomial, as the coefficient of
    // the degree-2^{d-1} basis monomial.
    bool theta_on_basis(int d) const;
    bool basis_in_ideal(int d) const;         // d >= 1
    int quotient_dim(int d) const;
    bool ideal_is_xy_ideal() const;           // verdict over degrees <= max

    // Action of a homogeneous op on x^xe y^ye; returns the
    // coefficient of the unique basis monomial in the target degree
    // (monomials with x-exponent >= 2 vanish).
    bool action_on_monomial(const steenrod::SteenrodOp& op, int xe, int ye) const;

    // theta_{xe+2ye} on x^xe y^ye through the full-sum action.
    static bool theta_on_monomial(int xe, int ye);

private:
    int max_degree_;
    steenrod::Caps caps_;
    std::vector<uint8_t> theta_kills_;  // basis_in_ideal per degree
};

// ---- dihedral-8 cohomology model ----

// F2[W1,W2,W]/(W1 W2) with |W1| = |W2| = 1, |W| = 2.  The Steenrod
// action is computed through the degreewise-injective restriction to
// two rank-2 elementary abelian subgroups and one cyclic-4 subgroup:
//   W1 |-> (a+b, 0,   x)
//   W2 |-> (0,   a+b, x)
//   W  |-> (ab,  ab,  y)
class D4Model {
public:
    struct MonoD4 {
        uint32_t p = 0, q = 0, s = 0;  // W1^p W2^q W^s, pq == 0

        int64_t degree() const { return int64_t(p) + q + 2 * int64_t(s); }
        bool operator==(const MonoD4&) const = default;
        bool operator<(const MonoD4& o) const
        {
            return std::tie(p, q, s) < std::tie(o.p, o.q, o.s);
        }
        std::string str() const;
    };

    explicit D4Model(int max_degree, const steenrod::Caps& caps = {});

    int max_degree() const { return max_degree_; }
    const std::vector<MonoD4>& basis(int d) const;
    int dim(int d) const { return static_cast<int>(basis(d).size()); }

    // zero after the W1 W2 = 0 reduction?
    static std::optional<MonoD4> mul(const MonoD4& a, const MonoD4& b);

    // Degree-d piece of the canonical ideal, rows over basis(d).
    const f2::Matrix& ideal(int d) const;
    int quotient_dim(int d) const;

    // Indices of the basis monomials spanning the quotient in degree d
    // and reduction of a coordinate vector to those coordinates.
    const std::vector<int>& quotient_basis(int d) const;
    std::vector<uint8_t> reduce_to_quotient(std::vector<uint8_t> coords, int d) const;

    // restriction to the three subgroups is injective in degree d
    bool restriction_injective(int d) const;

    // J == (W1 W, W2 W) degreewise up to max_degree?
    bool ideal_matches_generators() const;

private:
    int max_degree_;
    steenrod::Caps caps_;
    std::vector<std::vector<MonoD4>> basis_;
    std::vector<f2::Matrix> ideal_;            // per degree, rref'd rows
    std::vector<std::vector<int>> quot_basis_; // non-pivot columns
    std::vector<std::vector<int>> pivot_cols_;

    struct Restriction {
        poly::PolyF2 klein1, klein2;  // in F2[a,b]
        bool c4_nonzero;              // image in the cyclic model (dim <= 1)
    };
    Restriction restrict(const MonoD4& m) const;
    void build();
};

// Quotient dimensions are eventually periodic with bounded value.
bool dims_eventually_periodic(const std::vector<int>& dims, int max_period, int tail_start);

}  // namespace grw::swq
