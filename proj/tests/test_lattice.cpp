#include "grw/lattice.hpp"

#include "doctest.h"

#include <random>

TEST_SUITE_BEGIN("lattice");

using namespace grw::lattice;

TEST_CASE("normal form does not depend on generator order")
{
    std::mt19937 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        int amb = 2 + static_cast<int>(rng() % 4);
        Mat vs;
        for (int i = 0; i < amb + 2; ++i) {
            Vec v(amb);
            for (auto& x : v)
                x = static_cast<int>(rng() % 19) - 9;
            vs.push_back(v);
        }
        IntegerLattice a(amb), b(amb);
        a.add_all(vs);
        std::shuffle(vs.begin(), vs.end(), rng);
        b.add_all(vs);
        CHECK(a == b);
    }
}

TEST_CASE("membership and coordinates")
{
    IntegerLattice l(3);
    l.add({2, 1, 0});
    l.add({0, 3, 1});
    CHECK(l.contains({2, 1, 0}));
    CHECK(l.contains({2, 4, 1}));
    CHECK_FALSE(l.contains({1, 0, 0}));
    auto c = l.coordinates({4, 2, 0});
    REQUIRE(c.has_value());
    // reconstruct
    Vec back(3, 0);
    for (size_t k = 0; k < c->size(); ++k)
        for (int j = 0; j < 3; ++j)
            back[j] += (*c)[k] * l.basis()[k][j];
    CHECK(back == Vec{4, 2, 0});
}

TEST_CASE("Smith normal forms of pinned matrices")
{
    auto s = smith_normal_form({{2, 0}, {0, 3}});
    CHECK(s.diag == std::vector<mpz_class>{1, 6});

    auto t = smith_normal_form({{1, 0}, {0, 1}});
    CHECK(t.diag == std::vector<mpz_class>{1, 1});

    auto u = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    // divisibility chain
    REQUIRE(u.diag.size() == 3);
    for (size_t i = 0; i + 1 < u.diag.size(); ++i)
        if (u.diag[i] != 0)
            CHECK(u.diag[i + 1] % u.diag[i] == 0);
    // product of the factors = |det| = 624
    CHECK(u.diag[0] * u.diag[1] * u.diag[2] == 624);
}

TEST_CASE("column transforms are inverse to each other")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Mat a(n, Vec(n));
        for (auto& row : a)
            for (auto& x : row)
                x = static_cast<int>(rng() % 15) - 7;
        auto s = smith_normal_form(a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class acc = 0;
                for (int k = 0; k < n; ++k)
                    acc += s.V[i][k] * s.Vinv[k][j];
                CHECK(acc == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("quotients of nested lattices")
{
    IntegerLattice outer = IntegerLattice::full(2);
    IntegerLattice inner(2);
    inner.add({2, 0});
    inner.add({0, 3});
    QuotientStructure q(outer, inner);
    REQUIRE(q.factors().size() == 1);
    CHECK(q.factors()[0] == 6);
    CHECK(*q.order() == 6);
    // projection respects the inner lattice
    CHECK(q.project({2, 0}) == Vec{0});
    CHECK(q.project({0, 3}) == Vec{0});
    // the lift projects to a generator
    auto g = q.project(q.lifts()[0]);
    CHECK(g == Vec{1});

    // free summand
    IntegerLattice inner2(2);
    inner2.add({1, 0});
    QuotientStructure q2(outer, inner2);
    REQUIRE(q2.factors().size() == 1);
    CHECK(q2.factors()[0] == 0);
    CHECK_FALSE(q2.order().has_value());
}

TEST_CASE("projection kernel is exactly the inner lattice")
{
    std::mt19937 rng(7);
    IntegerLattice outer = IntegerLattice::full(3);
    IntegerLattice inner(3);
    inner.add({2, 2, 0});
    inner.add({0, 4, 2});
    inner.add({0, 0, 8});
    QuotientStructure q(outer, inner);
    for (int trial = 0; trial < 200; ++trial) {
        Vec v(3);
        for (auto& x : v)
            x = static_cast<int>(rng() % 41) - 20;
        bool in_inner = inner.contains(v);
        auto res = q.project(v);
        bool res_zero = true;
        for (const auto& x : res)
            res_zero &= x == 0;
        CHECK(in_inner == res_zero);
    }
}

TEST_SUITE_END();
