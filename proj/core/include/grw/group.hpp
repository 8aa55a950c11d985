#pragma once

// Finite groups as validated multiplication tables, their conjugacy
// structure, and complex character tables for the built-in catalog
// (cyclic, elementary abelian 2-groups, powers of the cyclic group of
// order 4, dihedral of order 8) and for user-supplied groups.

#include "grw/cyclo.hpp"

#include <string>
#include <vector>

namespace grw::rep {

class FiniteGroup {
public:
    // table[g][h] = g*h, element 0 the identity; validated on entry.
    static FiniteGroup from_table(std::vector<std::vector<int>> table);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int power(int g, int64_t k) const;
    int exponent() const { return exponent_; }
    bool abelian() const { return abelian_; }

    int class_count() const { return static_cast<int>(class_reps_.size()); }
    int class_of(int g) const { return class_of_[g]; }
    int class_rep(int c) const { return class_reps_[c]; }
    int class_size(int c) const { return class_sizes_[c]; }
    // conjugacy class of rep(c)^k
    int power_class(int c, int64_t k) const { return class_of_[power(class_reps_[c], k)]; }

    int element_order(int g) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<int> class_of_, class_reps_, class_sizes_;
    int exponent_ = 1;
    bool abelian_ = true;
};

// Complex irreducible characters, values per conjugacy class in
// Q[x]/(x^e - 1) with e the group exponent.
struct CharTable {
    FiniteGroup group;
    int e = 1;
    std::vector<std::string> names;
    std::vector<std::vector<Cyclo>> chars;  // [irreducible][class]

    int count() const { return static_cast<int>(chars.size()); }
    int dim(int i) const;  // character value at the identity class

    // First and second orthogonality, dimensions, and value sanity;
    // throws on failure.
    void validate() const;
};

// Catalog names: "c<N>" or "cyclic:<N>", "z2^<r>", "z4^<n>", "d4"
// (alias "dihedral8").
CharTable catalog(const std::string& name);

// Abelian group given by cyclic factor orders; characters are the
// dual group.
CharTable abelian_group(const std::vector<int>& factor_orders);

CharTable dihedral8();

// User group from JSON: { "order": n, "table": [[...]], optional
// "characters": [[[coeffs...] per class] per irreducible] }.
// Abelian groups get their characters computed; non-abelian input
// must supply them.
CharTable group_from_json(const std::string& json_text);
CharTable group_from_json_file(const std::string& path);

}  // namespace grw::rep
