#pragma once

// Grothendieck's gamma filtration of a representation ring as integer
// lattices, the graded pieces by Smith normal form, mod-2 reduction
// with algebraic Chern class coordinates, products of classes, and the
// decomposable part.

#include "grw/f2matrix.hpp"
#include "grw/lattice.hpp"
#include "grw/repring.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace grw::gamma {

// gamma^level of (irreducible - its dimension); the building blocks
// of the filtration.
struct Atom {
    int irr;
    int level;
    rep::VirtualRep value;
};

// An element of gr^degree with a representative in the ring and its
// residues over the quotient generators of gr^degree.
struct GrClass {
    int degree = 0;
    rep::VirtualRep representative;
    lattice::Vec residues;
};

// Formal product of algebraic Chern generators c_k(rho).
struct ChernMono {
    // ((irreducible index, k), multiplicity), sorted
    std::vector<std::pair<std::pair<int, int>, int>> powers;

    int64_t degree() const;
    std::string str(const rep::RepRing& ring) const;
};

class GammaFiltration {
public:
    explicit GammaFiltration(std::shared_ptr<const rep::RepRing> ring);

    const rep::RepRing& ring() const { return *ring_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    int max_atom_level() const { return wmax_; }

    // Gamma^n; Gamma^0 is the whole ring, Gamma^1 the augmentation
    // ideal.  Built by seeding with the atom-monomial spans of weight
    // n .. n+wmax-1 and saturating with basis-times-atom products.
    const lattice::IntegerLattice& gamma_lattice(int n);

    // Gamma^n / Gamma^{n+1}
    const lattice::QuotientStructure& gr_piece(int n);

    GrClass project(int n, const rep::VirtualRep& v);
    GrClass chern(int k, int irr);
    GrClass chern_monomial(const ChernMono& m);
    GrClass gr_product(const GrClass& a, const GrClass& b);

    // gr^n (x) F2: the summands of gr^n with even or zero invariant
    // factor.
    struct GrMod2 {
        int degree = 0;
        std::vector<int> summands;  // indices into gr_piece(n).factors()
        int dim = 0;
    };
    const GrMod2& gr_mod2(int n);
    std::vector<uint8_t> mod2_coords(int n, const GrClass& c);

    // independent Chern monomials covering gr^n (x) F2 (built on
    // demand; the enumeration grows with the number of irreducibles)
    struct ChernBasis {
        std::vector<ChernMono> monos;
        f2::Matrix coords;  // rows match monos
    };
    const ChernBasis& chern_basis(int n);

    // all Chern monomials of the given degree over the generators
    // c_k(rho), rho non-trivial, 1 <= k <= dim(rho)
    std::vector<ChernMono> chern_monomials(int degree);
    // multisets of n non-trivial line classes, as Chern monomials
    std::vector<ChernMono> line_monomials(int n);

    // decomposable part of gr^n (x) F2: the span of n-fold products
    // of degree-1 classes, in mod-2 coordinates
    f2::Matrix dec_span(int n);
    int dec_dim(int n);

    // |G|^n gr^n = 0 and Psi^k x = k^n x mod Gamma^{n+1}
    struct TorsionReport {
        bool torsion_ok = true;
        bool adams_ok = true;
        std::string details;
    };
    TorsionReport torsion_and_adams_checks(int n_max, const std::vector<int64_t>& ks = {2, 3});

    int saturation_rounds(int n);
    // enlarging the seed window by `extra` does not change Gamma^n
    bool window_soundness(int n, int extra);

private:
    std::shared_ptr<const rep::RepRing> ring_;
    std::vector<Atom> atoms_;
    int wmax_ = 1;
    std::vector<lattice::IntegerLattice> weight_spans_;
    std::map<int, lattice::IntegerLattice> gamma_;
    std::map<int, lattice::QuotientStructure> pieces_;
    std::map<int, GrMod2> mod2_;
    std::map<int, ChernBasis> chern_bases_;
    std::map<int, int> rounds_;

    const lattice::IntegerLattice& weight_span(int w);
    lattice::IntegerLattice seed_lattice(int n, int extra);
    lattice::IntegerLattice saturate(lattice::IntegerLattice l, int* rounds) const;
    rep::VirtualRep atom_power_product(const ChernMono& m) const;
};

}  // namespace grw::gamma
