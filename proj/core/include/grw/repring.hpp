#pragma once

// Representation rings over the reals or the complex numbers: integer
// vectors over the irreducible basis with exact lambda-ring structure
// (products, Adams operations, exterior powers through Newton's
// identities, gamma operations).

#include "grw/cyclo.hpp"
#include "grw/group.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace grw::rep {

enum class Field { Real, Complex };

// Coefficients over the irreducible basis of the ambient ring.
using VirtualRep = std::vector<mpz_class>;
using VirtualRepQ = std::vector<mpq_class>;

class RepRing {
public:
    RepRing(CharTable table, Field field);

    Field field() const { return field_; }
    const FiniteGroup& group() const { return table_.group; }
    const CharTable& complex_table() const { return table_; }

    int rank() const { return static_cast<int>(basis_values_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    int dim(int i) const { return dims_.at(i); }
    int trivial_index() const { return trivial_; }

    VirtualRep zero() const { return VirtualRep(rank(), 0); }
    VirtualRep unit() const;
    VirtualRep irreducible(int i) const;

    // class-function values (canonical group-ring representatives)
    std::vector<Cyclo> values(const VirtualRepQ& x) const;
    std::vector<Cyclo> values(const VirtualRep& x) const;

    // decompose canonical values over the basis; nullopt if outside
    std::optional<VirtualRepQ> decompose(const std::vector<Cyclo>& vals) const;

    VirtualRep mul(const VirtualRep& a, const VirtualRep& b) const;
    VirtualRepQ mul(const VirtualRepQ& a, const VirtualRepQ& b) const;

    // Psi^k by precomposition with the k-th power map.
    VirtualRep adams(int64_t k, const VirtualRep& x) const;

    // lambda^k through Newton's identities from Psi^1..Psi^k; exact
    // rational division by k, certified integral.
    VirtualRep lambda(int k, const VirtualRep& x) const;

    // gamma^k(x) = lambda^k(x + (k-1) 1)
    VirtualRep gamma(int k, const VirtualRep& x) const;

    // gamma^k(-x) via sum_{i} gamma^i(x) gamma^{k-i}(-x) = [k = 0]
    VirtualRep gamma_neg(int k, const VirtualRep& x) const;

    mpz_class augmentation(const VirtualRep& x) const;

    // indices of the 1-dimensional irreducibles (a group under mul)
    const std::vector<int>& line_indices() const { return lines_; }

    // on the complex table: +1 real, 0 complex, -1 quaternionic
    int fs_indicator(int complex_irr) const;

    // real basis elements expressed over the complex irreducibles
    // (identity when this ring is complex)
    const std::vector<VirtualRep>& complexification() const { return real_to_complex_; }

    bool conjugation_fixed(const VirtualRep& x) const;

private:
    CharTable table_;
    Field field_;
    std::vector<std::string> names_;
    std::vector<int> dims_;
    std::vector<std::vector<Cyclo>> basis_values_;  // [basis elt][class]
    std::vector<VirtualRep> real_to_complex_;
    int trivial_ = -1;
    std::vector<int> lines_;

    // rational eliminator for decompose(): rref of the basis-values
    // matrix with row-combination tracking
    std::vector<std::vector<mpq_class>> rref_rows_;
    std::vector<std::vector<mpq_class>> rref_comb_;
    std::vector<int> rref_pivots_;

    // structure constants: product of basis i and j over the basis
    std::vector<std::vector<VirtualRep>> structure_;

    void build_real_basis();
    void build_eliminator();
    void build_structure();
    std::vector<mpq_class> flatten(const std::vector<Cyclo>& vals) const;
};

// Parse "R" / "C" (case-insensitive).
Field parse_field(const std::string& s);

}  // namespace grw::rep
