#include "grw/polyf2.hpp"

#include "doctest.h"

#include <random>

using namespace grw::poly;
using grw::steenrod::MilnorElt;
using grw::steenrod::SteenrodOp;
using grw::steenrod::theta;

TEST_SUITE_BEGIN("polycohom");

namespace {

PolyF2 full_product(int nvars)
{
    PolyF2 p = PolyF2::one(nvars);
    for (int i = 0; i < nvars; ++i)
        p = p * PolyF2::var(nvars, i);
    return p;
}

}  // namespace

TEST_CASE("action on single variables")
{
    PolyF2 t = PolyF2::var(1, 0);
    CHECK(steenrod_action(SteenrodOp::sq(1), t) == t * t);
    CHECK(steenrod_action(SteenrodOp::single(MilnorElt({0, 1})), t) == t.pow(4));
    CHECK(steenrod_action(SteenrodOp::sq(2), t).is_zero());
    // theta_3 = Sq^1 on the triple product
    PolyF2 p = full_product(3);
    PolyF2 expected = PolyF2::var(3, 0).pow(2) * PolyF2::var(3, 1) * PolyF2::var(3, 2) +
                      PolyF2::var(3, 0) * PolyF2::var(3, 1).pow(2) * PolyF2::var(3, 2) +
                      PolyF2::var(3, 0) * PolyF2::var(3, 1) * PolyF2::var(3, 2).pow(2);
    CHECK(steenrod_action(theta(3), p) == expected);
}

TEST_CASE("tuple sums in low rank")
{
    CHECK(theta_direct(1) == PolyF2::var(1, 0));
    // n = 3 display
    PolyF2 expected = PolyF2::var(3, 0).pow(2) * PolyF2::var(3, 1) * PolyF2::var(3, 2) +
                      PolyF2::var(3, 0) * PolyF2::var(3, 1).pow(2) * PolyF2::var(3, 2) +
                      PolyF2::var(3, 0) * PolyF2::var(3, 1) * PolyF2::var(3, 2).pow(2);
    CHECK(theta_direct(3) == expected);
    // all variables equal: the tuple count is odd, so t^{2^{n-1}} survives
    PolyF2 t8 = PolyF2::var(1, 0).pow(8);
    CHECK(theta_direct(4, 1, {0, 0, 0, 0}) == t8);
}

TEST_CASE("products over odd subset sizes")
{
    CHECK(mk_product(1) == PolyF2::var(1, 0));
    // n = 3: t1 t2 t3 (t1 + t2 + t3)
    PolyF2 m3 = full_product(3) * (PolyF2::var(3, 0) + PolyF2::var(3, 1) + PolyF2::var(3, 2));
    CHECK(mk_product(3) == m3);
    CHECK(mk_product(5) == theta_direct(5));
    CHECK_THROWS_AS(mk_product(9), grw::steenrod::cap_error);
}

TEST_CASE("three-way identity")
{
    for (int n = 1; n <= 5; ++n) {
        PolyF2 a = steenrod_action(theta(n), full_product(n));
        PolyF2 b = theta_direct(n);
        PolyF2 c = mk_product(n);
        CHECK(a == b);
        CHECK(b == c);
    }
}

TEST_CASE("full-sum action agrees with the explicit theta element")
{
    for (int r = 1; r <= 3; ++r)
        for (int d = 1; d <= 7; ++d)
            for (const auto& m : monomials_of_degree(r, d)) {
                PolyF2 p(r, {m});
                CHECK(theta_action(p) == steenrod_action(theta(d), p));
            }
}

TEST_CASE("virtual series of line differences")
{
    PolyF2 t = PolyF2::var(1, 0);
    auto s1 = sw_virtual({t}, {PolyF2::zero(1)}, 4);
    CHECK(s1.w(1) == t);

    // (L1 - 1)(L2 - 1): plus = {t1+t2, 0}, minus = {t1, t2}
    PolyF2 t1 = PolyF2::var(2, 0), t2 = PolyF2::var(2, 1);
    auto s2 = sw_virtual({t1 + t2, PolyF2::zero(2)}, {t1, t2}, 4);
    CHECK(s2.w(1).is_zero());
    CHECK(s2.w(2) == t1 * t2);

    auto [plus, minus] = product_line_expansion(3);
    auto s3 = sw_virtual(plus, minus, 4);
    CHECK(s3.w(1).is_zero());
    CHECK(s3.w(2).is_zero());
    CHECK(s3.w(3).is_zero());
    CHECK(s3.w(4) == theta_direct(3));
}

TEST_CASE("line expansion bookkeeping")
{
    auto [p1, m1] = product_line_expansion(1);
    REQUIRE(p1.size() == 1);
    REQUIRE(m1.size() == 1);
    CHECK(p1[0] == PolyF2::var(1, 0));
    CHECK(m1[0].is_zero());

    auto [p3, m3] = product_line_expansion(3);
    CHECK(p3.size() == 4);  // both ranks are 2^{n-1}
    CHECK(m3.size() == 4);
}

TEST_CASE("vanishing below the threshold on random substitutions")
{
    std::mt19937 rng(17);
    for (int n = 1; n <= 5; ++n) {
        int nvars = n + 2;
        for (int trial = 0; trial < 3; ++trial) {
            // pick n distinct variables at random
            std::vector<int> pool(nvars);
            for (int i = 0; i < nvars; ++i)
                pool[i] = i;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> chosen(pool.begin(), pool.begin() + n);

            auto [plus, minus] = product_line_expansion(n);
            auto widen = [&](std::vector<PolyF2> ls) {
                std::vector<PolyF2> out;
                for (auto& l : ls) {
                    PolyF2 w = PolyF2::zero(nvars);
                    for (const auto& mono : l.terms())
                        for (size_t v = 0; v < mono.e.size(); ++v)
                            if (mono.e[v])
                                w += PolyF2::var(nvars, chosen[v]);
                    out.push_back(w);
                }
                return out;
            };
            int64_t top = int64_t(1) << (n - 1);
            auto s = sw_virtual(widen(plus), widen(minus), top);
            for (int64_t i = 1; i < top; ++i)
                CHECK(s.w(i).is_zero());
            CHECK(s.w(top) == theta_direct(n, nvars, chosen));
        }
    }
}

TEST_CASE("least nonzero index is a power of two")
{
    std::mt19937 rng(99);
    const int D = 16;
    int nontrivial = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int nvars = 3;
        int nlines = 1 + static_cast<int>(rng() % 5);
        auto random_line = [&]() {
            std::vector<int> vars;
            for (int v = 0; v < nvars; ++v)
                if (rng() % 2)
                    vars.push_back(v);
            return linear_form(nvars, vars);
        };
        std::vector<PolyF2> plus, minus;
        for (int i = 0; i < nlines; ++i) {
            plus.push_back(random_line());
            minus.push_back(random_line());
        }
        auto s = sw_virtual(plus, minus, D);
        for (int64_t i = 1; i <= D; ++i)
            if (!s.w(i).is_zero()) {
                ++nontrivial;
                CHECK((i & (i - 1)) == 0);
                break;
            }
    }
    CHECK(nontrivial > 50);  // the sample is not vacuous
}

TEST_CASE("composition and Cartan properties of the action")
{
    std::mt19937 rng(3);
    PolyF2 probe = full_product(4);
    for (int trial = 0; trial < 25; ++trial) {
        int64_t da = rng() % 5, db = rng() % 5;
        auto ba = grw::steenrod::enumerate_milnor_basis(da);
        auto bb = grw::steenrod::enumerate_milnor_basis(db);
        if (ba.empty() || bb.empty())
            continue;
        SteenrodOp a = SteenrodOp::single(ba[rng() % ba.size()]);
        SteenrodOp b = SteenrodOp::single(bb[rng() % bb.size()]);
        CHECK(steenrod_action(product(a, b), probe) ==
              steenrod_action(a, steenrod_action(b, probe)));
    }
    // Cartan: Sq^k(pq) = sum Sq^i p Sq^j q
    PolyF2 p = PolyF2::var(2, 0) * PolyF2::var(2, 0) + PolyF2::var(2, 0) * PolyF2::var(2, 1);
    PolyF2 q = PolyF2::var(2, 1);
    for (int k = 0; k <= 4; ++k) {
        PolyF2 lhs = steenrod_action(SteenrodOp::sq(k), p * q);
        PolyF2 rhs(2);
        for (int i = 0; i <= k; ++i)
            rhs += steenrod_action(SteenrodOp::sq(i), p) *
                   steenrod_action(SteenrodOp::sq(k - i), q);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tuple sum vanishes under the three-term substitutions")
{
    for (int n = 3; n <= 5; ++n) {
        PolyF2 p = theta_direct(n);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                PolyF2 repl = PolyF2::var(n, i) + PolyF2::var(n, j);
                CHECK(p.subst(0, repl).is_zero());
            }
    }
}

TEST_CASE("squares of elementary symmetric polynomials")
{
    CHECK(sq_on_elementary_symmetric(0, 2, 3) == elementary_symmetric(2, 3));
    PolyF2 e1 = elementary_symmetric(1, 2), e2 = elementary_symmetric(2, 2);
    CHECK(sq_on_elementary_symmetric(1, 2, 2) == e1 * e2);
    CHECK(sq_on_elementary_symmetric(2, 2, 2) == e2 * e2);
}

TEST_SUITE_END();
