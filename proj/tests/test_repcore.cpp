#include "grw/repring.hpp"

#include "doctest.h"

#include <random>

TEST_SUITE_BEGIN("repcore");

using namespace grw::rep;

namespace {

int idx(const RepRing& r, const std::string& name)
{
    for (int i = 0; i < r.rank(); ++i)
        if (r.name(i) == name)
            return i;
    REQUIRE(false);
    return -1;
}

VirtualRep aug_shifted(const RepRing& r, int i)
{
    VirtualRep x = r.irreducible(i);
    x[r.trivial_index()] -= r.dim(i);
    return x;
}

}  // namespace

TEST_CASE("catalog construction")
{
    auto c4 = catalog("cyclic:4");
    CHECK(c4.count() == 4);
    CHECK(c4.e == 4);
    c4.validate();

    auto d4 = catalog("d4");
    CHECK(d4.count() == 5);
    int dims[5];
    for (int i = 0; i < 5; ++i)
        dims[i] = d4.dim(i);
    int ones = 0, twos = 0;
    for (int v : dims)
        (v == 1 ? ones : twos) += 1;
    CHECK(ones == 4);
    CHECK(twos == 1);
    d4.validate();

    auto z22 = catalog("z2^2");
    CHECK(z22.count() == 4);
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) {
            mpq_class q;
            CHECK(z22.chars[i][c].is_rational_value(q));
            CHECK((q == 1 || q == -1));
        }
    CHECK_THROWS_AS(catalog("q8"), std::invalid_argument);
}

TEST_CASE("orthogonality is validated for every catalog group")
{
    for (const char* g : {"c2", "c3", "c4", "c5", "c6", "c8", "c10", "c12", "z2^2", "z2^3",
                          "z4^2", "d4"})
        CHECK_NOTHROW(catalog(g).validate());
}

TEST_CASE("indicators")
{
    RepRing c4(catalog("c4"), Field::Complex);
    CHECK(c4.fs_indicator(idx(c4, "1")) == 1);
    CHECK(c4.fs_indicator(idx(c4, "rho")) == 0);
    CHECK(c4.fs_indicator(idx(c4, "eps")) == 1);

    RepRing d4(catalog("d4"), Field::Complex);
    CHECK(d4.fs_indicator(idx(d4, "Delta")) == 1);
}

TEST_CASE("real irreducibles")
{
    RepRing c4(catalog("c4"), Field::Real);
    CHECK(c4.rank() == 3);  // 1, eps, r1
    CHECK(c4.dim(idx(c4, "r1")) == 2);

    RepRing z23(catalog("z2^3"), Field::Real);
    CHECK(z23.rank() == 8);  // already real

    // C_{2m}, m odd: m + 1 real irreducibles
    RepRing c6(catalog("c6"), Field::Real);
    CHECK(c6.rank() == 4);
    RepRing c10(catalog("c10"), Field::Real);
    CHECK(c10.rank() == 6);
}

TEST_CASE("Adams operations")
{
    for (const char* g : {"c2", "c4", "c8", "z2^2", "z4^2", "d4"}) {
        RepRing R(catalog(g), Field::Real);
        int64_t order = R.group().order();
        for (int i = 0; i < R.rank(); ++i) {
            // Psi^1 is the identity
            CHECK(R.adams(1, R.irreducible(i)) == R.irreducible(i));
            // Psi^{|G|} collapses to the dimension
            VirtualRep want = R.zero();
            want[R.trivial_index()] = R.dim(i);
            CHECK(R.adams(order, R.irreducible(i)) == want);
        }
    }
    // Psi^2(rho) = rho^2 on the cyclic group of order 4
    RepRing c4(catalog("c4"), Field::Complex);
    CHECK(c4.adams(2, c4.irreducible(idx(c4, "rho"))) == c4.irreducible(idx(c4, "eps")));
}

TEST_CASE("exterior powers")
{
    RepRing d4(catalog("d4"), Field::Real);
    int iD = idx(d4, "Delta");
    // lambda^1 = identity
    CHECK(d4.lambda(1, d4.irreducible(iD)) == d4.irreducible(iD));
    // lambda^2(Delta) = r3 = r1 r2
    CHECK(d4.lambda(2, d4.irreducible(iD)) == d4.irreducible(idx(d4, "r3")));
    CHECK(d4.mul(d4.irreducible(idx(d4, "r1")), d4.irreducible(idx(d4, "r2"))) ==
          d4.irreducible(idx(d4, "r3")));
    // lambda^2 of a line vanishes
    CHECK(d4.lambda(2, d4.irreducible(idx(d4, "r1"))) == d4.zero());
}

TEST_CASE("Newton route equals elementary symmetric values on abelian groups")
{
    // independent oracle: for a sum of lines the exterior powers are
    // the elementary symmetric sums of the lines
    RepRing z22(catalog("z2^2"), Field::Real);
    std::vector<int> lines = z22.line_indices();
    REQUIRE(lines.size() == 4);
    // x = sum of all four lines
    VirtualRep x = z22.zero();
    for (int l : lines)
        x[l] += 1;
    // e_2 = sum over pairs
    VirtualRep e2 = z22.zero();
    for (size_t a = 0; a < lines.size(); ++a)
        for (size_t b = a + 1; b < lines.size(); ++b) {
            VirtualRep p = z22.mul(z22.irreducible(lines[a]), z22.irreducible(lines[b]));
            for (size_t k = 0; k < p.size(); ++k)
                e2[k] += p[k];
        }
    CHECK(z22.lambda(2, x) == e2);
    // e_4 = product of all lines
    VirtualRep e4 = z22.unit();
    for (int l : lines)
        e4 = z22.mul(e4, z22.irreducible(l));
    CHECK(z22.lambda(4, x) == e4);
}

TEST_CASE("gamma operations")
{
    RepRing d4(catalog("d4"), Field::Real);
    int iD = idx(d4, "Delta");
    VirtualRep x = aug_shifted(d4, iD);
    // gamma^1 = identity
    CHECK(d4.gamma(1, x) == x);
    // gamma^2(Delta - 2) = 1 - Delta + r1 r2
    VirtualRep expect = d4.unit();
    expect[iD] -= 1;
    expect[idx(d4, "r3")] += 1;
    CHECK(d4.gamma(2, x) == expect);
    // gamma^2 of (line - 1) vanishes
    VirtualRep l = aug_shifted(d4, idx(d4, "r1"));
    CHECK(d4.gamma(2, l) == d4.zero());
    // gamma^2(-x) = gamma^1(x)^2 - gamma^2(x)
    VirtualRep g1 = d4.gamma(1, x), g2 = d4.gamma(2, x);
    VirtualRep rhs = d4.mul(g1, g1);
    for (size_t k = 0; k < rhs.size(); ++k)
        rhs[k] -= g2[k];
    CHECK(d4.gamma_neg(2, x) == rhs);
    // cross-check the recursion against the Newton path
    VirtualRep neg = x;
    for (auto& v : neg)
        v = -v;
    for (int k = 1; k <= 4; ++k)
        CHECK(d4.gamma_neg(k, x) == d4.gamma(k, neg));
}

TEST_CASE("gamma vanishes above the dimension")
{
    for (const char* g : {"c4", "c8", "z2^2", "z4^2", "d4"}) {
        RepRing R(catalog(g), Field::Real);
        for (int i = 0; i < R.rank(); ++i) {
            VirtualRep x = aug_shifted(R, i);
            for (int k = R.dim(i) + 1; k <= R.dim(i) + 2; ++k)
                CHECK(R.gamma(k, x) == R.zero());
        }
    }
}

TEST_CASE("lambda is multiplicative on sums")
{
    std::mt19937 rng(41);
    RepRing d4(catalog("d4"), Field::Real);
    for (int trial = 0; trial < 10; ++trial) {
        // random actual representations of dimension <= 4
        auto random_rep = [&]() {
            VirtualRep x = d4.zero();
            int dim = 0;
            while (dim < 1 + static_cast<int>(rng() % 4)) {
                int i = static_cast<int>(rng() % d4.rank());
                x[i] += 1;
                dim += d4.dim(i);
            }
            return x;
        };
        VirtualRep a = random_rep(), b = random_rep();
        VirtualRep sum = a;
        for (size_t k = 0; k < sum.size(); ++k)
            sum[k] += b[k];
        for (int k = 1; k <= 4; ++k) {
            VirtualRep want = d4.zero();
            for (int i = 0; i <= k; ++i) {
                VirtualRep term = d4.mul(d4.lambda(i, a), d4.lambda(k - i, b));
                for (size_t j = 0; j < want.size(); ++j)
                    want[j] += term[j];
            }
            CHECK(d4.lambda(k, sum) == want);
        }
    }
}

TEST_CASE("real operations stay conjugation-fixed")
{
    for (const char* g : {"c4", "c8", "z4^2", "d4"}) {
        RepRing R(catalog(g), Field::Real);
        for (int i = 0; i < R.rank(); ++i) {
            CHECK(R.conjugation_fixed(R.irreducible(i)));
            CHECK(R.conjugation_fixed(R.adams(3, R.irreducible(i))));
            CHECK(R.conjugation_fixed(R.lambda(2, R.irreducible(i))));
        }
    }
}

TEST_CASE("augmentation and lines")
{
    RepRing d4(catalog("d4"), Field::Real);
    CHECK(d4.augmentation(d4.irreducible(idx(d4, "Delta"))) == 2);
    CHECK(d4.line_indices().size() == 4);
    RepRing c3(catalog("c3"), Field::Real);
    CHECK(c3.line_indices().size() == 1);  // only the trivial line over R
}

TEST_CASE("user groups from JSON")
{
    // the Klein group as a bare table: characters are computed
    std::string klein = R"({
      "order": 4,
      "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]
    })";
    auto ct = group_from_json(klein);
    CHECK(ct.count() == 4);
    CHECK_NOTHROW(ct.validate());

    // invalid: no identity
    std::string bad = R"({"order": 2, "table": [[1,0],[0,1]]})";
    CHECK_THROWS_AS(group_from_json(bad), std::invalid_argument);

    // non-abelian without characters
    std::string s3 = R"({
      "order": 6,
      "table": [[0,1,2,3,4,5],[1,2,0,4,5,3],[2,0,1,5,3,4],
                [3,5,4,0,2,1],[4,3,5,1,0,2],[5,4,3,2,1,0]]
    })";
    CHECK_THROWS_AS(group_from_json(s3), std::invalid_argument);
}

TEST_SUITE_END();
