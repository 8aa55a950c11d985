#pragma once

// Exact arithmetic in the mod-2 Steenrod algebra.
//
// Elements are stored in the Milnor basis: Sq(r1,...,rk) denotes the
// operation dual to the monomial xi_1^{r1} ... xi_k^{rk} in the dual
// algebra, with |xi_i| = 2^i - 1.  Coefficients live in F2, so an
// element is simply a set of basis monomials.  The admissible
// (Serre-Cartan) basis Sq^{i1} Sq^{i2} ... with i_j >= 2 i_{j+1} is
// supported through a degreewise change of basis.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grw::steenrod {

// Raised when a computation would pass the configured degree cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
    // Largest internal degree the algebra routines will touch.  The
    // default covers theta_8 (degree 2^7 - 8 = 120).
    int64_t degree = 120;

    void check(int64_t d, const char* where) const;
};

// One Milnor basis monomial Sq(r1,...,rk).  Canonical form: no
// trailing zeros; the empty sequence is the unit.
struct MilnorElt {
    std::vector<int64_t> r;

    MilnorElt() = default;
    explicit MilnorElt(std::vector<int64_t> exps);
    MilnorElt(std::initializer_list<int64_t> exps)
        : MilnorElt(std::vector<int64_t>(exps))
    {
    }

    static MilnorElt unit() { return MilnorElt{}; }
    static MilnorElt sq(int64_t k);  // Sq^k = Sq(k); Sq^0 is the unit

    int64_t degree() const;  // sum r_i (2^i - 1)
    bool is_unit() const { return r.empty(); }

    bool operator==(const MilnorElt& o) const { return r == o.r; }
    std::string str() const;  // "Sq(1,1)", unit prints "1"
};

// Canonical listing order used everywhere Milnor monomials appear:
// lexicographic with larger entries first, so Sq(4) precedes Sq(1,1).
bool milnor_before(const MilnorElt& a, const MilnorElt& b);

// An F2 linear combination of Milnor basis monomials; terms are kept
// sorted by milnor_before with set semantics (duplicates cancel).
class SteenrodOp {
public:
    SteenrodOp() = default;
    explicit SteenrodOp(std::vector<MilnorElt> terms);
    static SteenrodOp zero() { return SteenrodOp{}; }
    static SteenrodOp unit() { return SteenrodOp({MilnorElt::unit()}); }
    static SteenrodOp single(MilnorElt m) { return SteenrodOp({std::move(m)}); }
    static SteenrodOp sq(int64_t k) { return single(MilnorElt::sq(k)); }

    const std::vector<MilnorElt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool contains(const MilnorElt& m) const;

    // All terms share one degree (true for zero).
    bool homogeneous() const;
    // Degree of a nonzero homogeneous element.
    int64_t degree() const;

    SteenrodOp& operator+=(const SteenrodOp& o);  // F2 addition
    friend SteenrodOp operator+(SteenrodOp a, const SteenrodOp& b) { return a += b; }
    bool operator==(const SteenrodOp& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::vector<MilnorElt> terms_;
};

// All canonical Milnor monomials of degree d, in the canonical order.
std::vector<MilnorElt> enumerate_milnor_basis(int64_t d, const Caps& caps = {});

// Product of two basis monomials, expanded over Milnor's allowable
// matrices with multinomial coefficients reduced mod 2 by the
// binary-carry criterion.
SteenrodOp milnor_product(const MilnorElt& a, const MilnorElt& b);
SteenrodOp product(const SteenrodOp& a, const SteenrodOp& b);

// theta(n): the sum of every Milnor basis monomial of degree
// 2^{n-1} - n.  theta(1) = theta(2) = 1.
SteenrodOp theta(int n, const Caps& caps = {});

// ---- admissible (Serre-Cartan) basis ----

// Sq^{i1} ... Sq^{im} with i_j >= 2 i_{j+1} and i_m >= 1; the empty
// word is the unit.
struct AdmissibleMono {
    std::vector<int64_t> i;

    AdmissibleMono() = default;
    explicit AdmissibleMono(std::vector<int64_t> word);
    AdmissibleMono(std::initializer_list<int64_t> word)
        : AdmissibleMono(std::vector<int64_t>(word))
    {
    }

    int64_t degree() const;
    bool is_unit() const { return i.empty(); }
    bool operator==(const AdmissibleMono& o) const { return i == o.i; }
    std::string str() const;  // "Sq^3 Sq^1", unit prints "1"
};

// Canonical order for admissible words: plain lexicographic, so
// Sq^3 Sq^1 precedes Sq^4.
bool admissible_before(const AdmissibleMono& a, const AdmissibleMono& b);

class SerreCartanOp {
public:
    SerreCartanOp() = default;
    explicit SerreCartanOp(std::vector<AdmissibleMono> terms);

    const std::vector<AdmissibleMono>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SerreCartanOp& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    std::vector<AdmissibleMono> terms_;
};

std::vector<AdmissibleMono> enumerate_admissible(int64_t d, const Caps& caps = {});

// Expand an admissible word into the Milnor basis.
SteenrodOp expand_admissible(const AdmissibleMono& m);

// Basis change by degreewise F2 linear algebra: expand every
// admissible word of the degree, assemble the square change-of-basis
// matrix, solve.  Requires a homogeneous input.
SerreCartanOp to_serre_cartan(const SteenrodOp& x, const Caps& caps = {});
SteenrodOp from_serre_cartan(const SerreCartanOp& x);

// Hopf algebra conjugation.  On a single Sq^n it follows the
// recursion c(Sq^n) = sum_{j<n} Sq^{n-j} c(Sq^j); a general element is
// first written in the admissible basis and c is applied as an
// anti-homomorphism.
SteenrodOp antipode(const SteenrodOp& x, const Caps& caps = {});

}  // namespace grw::steenrod
