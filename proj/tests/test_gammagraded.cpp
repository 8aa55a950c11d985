#include "grw/gammagraded.hpp"

#include "doctest.h"

#include <random>

TEST_SUITE_BEGIN("gammagraded");

using namespace grw;
using namespace grw::gamma;
using namespace grw::rep;

namespace {

std::shared_ptr<RepRing> ring_of(const std::string& g, Field f)
{
    return std::make_shared<RepRing>(catalog(g), f);
}

int idx(const RepRing& r, const std::string& name)
{
    for (int i = 0; i < r.rank(); ++i)
        if (r.name(i) == name)
            return i;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("the first stage is the augmentation ideal")
{
    for (const char* g : {"c4", "z2^2", "d4"}) {
        auto ring = ring_of(g, Field::Real);
        GammaFiltration gf(ring);
        lattice::IntegerLattice aug(ring->rank());
        for (int i = 0; i < ring->rank(); ++i) {
            if (i == ring->trivial_index())
                continue;
            VirtualRep x = ring->irreducible(i);
            x[ring->trivial_index()] -= ring->dim(i);
            aug.add(x);
        }
        CHECK(gf.gamma_lattice(1) == aug);
    }
}

TEST_CASE("stages are nested and have full rank")
{
    auto ring = ring_of("d4", Field::Real);
    GammaFiltration gf(ring);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& row : gf.gamma_lattice(n + 1).basis())
            CHECK(gf.gamma_lattice(n).contains(row));
        CHECK(gf.gamma_lattice(n).rank() == ring->rank() - 1);
    }
    CHECK(gf.gamma_lattice(0).rank() == ring->rank());
}

TEST_CASE("products respect the filtration on samples")
{
    std::mt19937 rng(31);
    auto ring = ring_of("z4^2", Field::Real);
    GammaFiltration gf(ring);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 5; ++b) {
            const auto& la = gf.gamma_lattice(a).basis();
            const auto& lb = gf.gamma_lattice(b).basis();
            for (int trial = 0; trial < 3; ++trial) {
                const auto& va = la[rng() % la.size()];
                const auto& vb = lb[rng() % lb.size()];
                CHECK(gf.gamma_lattice(a + b).contains(ring->mul(va, vb)));
            }
        }
}

TEST_CASE("cyclic groups over an algebraically closed field")
{
    for (int N : {2, 3, 4, 6, 8}) {
        GammaFiltration gf(ring_of("c" + std::to_string(N), Field::Complex));
        for (int n = 1; n <= 6; ++n) {
            const auto& f = gf.gr_piece(n).factors();
            REQUIRE(f.size() == 1);
            CHECK(f[0] == N);
        }
    }
}

TEST_CASE("powers of the augmentation ideal for one-dimensional catalogs")
{
    // if every irreducible is a line, the n-th stage is the n-th power
    // of the augmentation ideal
    for (const char* g : {"c4", "c6", "z2^2"}) {
        auto ring = ring_of(g, Field::Complex);
        GammaFiltration gf(ring);
        lattice::IntegerLattice power(ring->rank());
        // I^n: products of n augmentation basis elements
        std::vector<VirtualRep> gens;
        for (int i = 0; i < ring->rank(); ++i) {
            if (i == ring->trivial_index())
                continue;
            VirtualRep x = ring->irreducible(i);
            x[ring->trivial_index()] -= 1;
            gens.push_back(x);
        }
        const int n = 3;
        std::vector<size_t> pick(n, 0);
        auto rec = [&](auto&& self, int k, size_t from, VirtualRep acc) -> void {
            if (k == n) {
                power.add(acc);
                return;
            }
            for (size_t i = from; i < gens.size(); ++i)
                self(self, k + 1, i, ring->mul(acc, gens[i]));
        };
        rec(rec, 0, 0, ring->unit());
        CHECK(gf.gamma_lattice(n) == power);
    }
}

TEST_CASE("graded piece zero is the integers")
{
    GammaFiltration gf(ring_of("c4", Field::Complex));
    const auto& f = gf.gr_piece(0).factors();
    REQUIRE(f.size() == 1);
    CHECK(f[0] == 0);
}

TEST_CASE("first Chern classes identify the line group")
{
    for (const char* g : {"c4", "c8", "z2^2", "d4"}) {
        auto ring = ring_of(g, Field::Real);
        GammaFiltration gf(ring);
        auto order = gf.gr_piece(1).order();
        REQUIRE(order.has_value());
        CHECK(*order == static_cast<long>(ring->line_indices().size()));
    }
    // c1(r_k) = 0 for the two-dimensional characters of a cyclic group
    auto c8 = ring_of("c8", Field::Real);
    GammaFiltration gf(c8);
    for (int i = 0; i < c8->rank(); ++i) {
        if (c8->dim(i) != 2)
            continue;
        auto cls = gf.chern(1, i);
        bool zero = true;
        for (const auto& r : cls.residues)
            zero &= r == 0;
        CHECK(zero);
    }
    // c1(rho^k) = k c1(rho) over C
    auto c8c = ring_of("c8", Field::Complex);
    GammaFiltration gc(c8c);
    int irho = idx(*c8c, "rho");
    auto c1 = gc.chern(1, irho);
    for (int k = 2; k <= 7; ++k) {
        int irk = idx(*c8c, k == 4 ? "eps" : "rho^" + std::to_string(k));
        auto ck = gc.chern(1, irk);
        lattice::Vec want = c1.residues;
        for (auto& v : want)
            v = (v * k) % 8;
        CHECK(ck.residues == want);
    }
}

TEST_CASE("mod-2 dimensions of small catalogs")
{
    // cyclic: trivial for odd order, one line of dimensions otherwise
    GammaFiltration c3(ring_of("c3", Field::Real));
    for (int n = 1; n <= 6; ++n)
        CHECK(c3.gr_mod2(n).dim == 0);
    GammaFiltration c12(ring_of("c12", Field::Real));
    for (int n = 1; n <= 8; ++n)
        CHECK(c12.gr_mod2(n).dim == 1);
    // rank-2 elementary abelian: 2, 3, 3, ...
    GammaFiltration z22(ring_of("z2^2", Field::Real));
    CHECK(z22.gr_mod2(1).dim == 2);
    for (int n = 2; n <= 6; ++n)
        CHECK(z22.gr_mod2(n).dim == 3);
}

TEST_CASE("products of classes are representative independent")
{
    std::mt19937 rng(53);
    auto ring = ring_of("d4", Field::Real);
    GammaFiltration gf(ring);
    int ir1 = idx(*ring, "r1"), iD = idx(*ring, "Delta");
    GrClass a = gf.chern(1, ir1);
    GrClass b = gf.chern(2, iD);
    auto base = gf.gr_product(a, b).residues;
    for (int trial = 0; trial < 10; ++trial) {
        // perturb both representatives by deeper elements
        const auto& deeper_a = gf.gamma_lattice(a.degree + 1).basis();
        const auto& deeper_b = gf.gamma_lattice(b.degree + 1).basis();
        GrClass a2 = a, b2 = b;
        const auto& da = deeper_a[rng() % deeper_a.size()];
        const auto& db = deeper_b[rng() % deeper_b.size()];
        for (size_t k = 0; k < a2.representative.size(); ++k) {
            a2.representative[k] += da[k];
            b2.representative[k] -= db[k];
        }
        CHECK(gf.gr_product(a2, b2).residues == base);
    }
}

TEST_CASE("decomposable parts")
{
    GammaFiltration z22(ring_of("z2^2", Field::Real));
    for (int n = 1; n <= 5; ++n)
        CHECK(z22.dec_dim(n) == z22.gr_mod2(n).dim);  // everything decomposable

    GammaFiltration z4(ring_of("z4^1", Field::Real));
    CHECK(z4.dec_dim(1) == 1);
    CHECK(z4.dec_dim(2) == 0);
    CHECK(z4.dec_dim(3) == 0);

    GammaFiltration z42(ring_of("z4^2", Field::Real));
    CHECK(z42.dec_dim(1) == 2);
    CHECK(z42.dec_dim(2) == 1);
    CHECK(z42.dec_dim(3) == 0);
}

TEST_CASE("torsion bounds and Adams congruences")
{
    for (const char* g : {"c4", "c6", "z2^2", "d4"})
        for (Field f : {Field::Complex, Field::Real}) {
            GammaFiltration gf(ring_of(g, f));
            auto rep = gf.torsion_and_adams_checks(5);
            CHECK(rep.torsion_ok);
            CHECK(rep.adams_ok);
        }
}

TEST_CASE("wider seed windows change nothing")
{
    for (const char* g : {"c4", "c8", "z2^2", "z4^2", "d4"})
        for (Field f : {Field::Complex, Field::Real}) {
            GammaFiltration gf(ring_of(g, f));
            for (int n = 1; n <= 6; ++n) {
                CHECK(gf.window_soundness(n, 1));
                CHECK(gf.window_soundness(n, 2));
            }
        }
}

TEST_CASE("Chern monomials span the mod-2 pieces")
{
    auto ring = ring_of("d4", Field::Real);
    GammaFiltration gf(ring);
    for (int n = 1; n <= 6; ++n) {
        const auto& basis = gf.chern_basis(n);
        CHECK(static_cast<int>(basis.monos.size()) == gf.gr_mod2(n).dim);
    }
}

TEST_SUITE_END();
