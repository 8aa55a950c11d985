#pragma once

// Subgroups of Z^m in canonical Hermite normal form, with exact
// membership and coordinate solving, plus Smith normal form for
// quotients of nested lattices.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace grw::lattice {

using Vec = std::vector<mpz_class>;
using Mat = std::vector<Vec>;

// Row-style lattice: rows_ is in canonical HNF (pivots positive,
// entries above a pivot reduced into [0, pivot)).  Equal lattices have
// identical rows.
class IntegerLattice {
public:
    explicit IntegerLattice(int ambient);

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const Mat& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Adjoin a vector (incremental HNF update); returns true if the
    // lattice grew.
    bool add(Vec v);
    void add_all(const Mat& vs);

    bool contains(const Vec& v) const;
    // Coordinates of v over basis(); nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    bool operator==(const IntegerLattice& o) const
    {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

    static IntegerLattice full(int ambient);

private:
    int ambient_;
    Mat rows_;
    std::vector<int> pivots_;  // strictly increasing pivot columns

    void reduce_above(size_t k);  // restore above-pivot reduction for row k
};

struct SmithDecomposition {
    // U A V = D for unimodular U, V; only V and V^{-1} are tracked
    // (row operations do not matter for quotient structure).
    std::vector<mpz_class> diag;  // invariant factors, divisibility chain
    Mat V, Vinv;
};

// Smith normal form of an arbitrary integer matrix (rows x cols).
SmithDecomposition smith_normal_form(Mat a);

// The quotient L / M for nested lattices M subset L: invariant
// factors (0 marks a free summand), generator lifts in the ambient
// space, and projection of lattice elements to their residues.
class QuotientStructure {
public:
    QuotientStructure(const IntegerLattice& outer, const IntegerLattice& inner);

    // one entry per quotient generator; factor 0 = free summand,
    // factor 1 entries are dropped
    const std::vector<mpz_class>& factors() const { return factors_; }
    const Mat& lifts() const { return lifts_; }

    // residues of v (must lie in the outer lattice) over the
    // generators, reduced mod the factors
    Vec project(const Vec& v) const;

    // the order of the quotient group as long as it is finite
    std::optional<mpz_class> order() const;

private:
    IntegerLattice outer_;
    std::vector<mpz_class> factors_;
    Mat lifts_;
    Mat new_basis_;          // rows: Vinv . outer basis
    Mat vmat_;               // column-op accumulator from the SNF
    std::vector<int> kept_;  // indices of non-trivial summands
};

}  // namespace grw::lattice
