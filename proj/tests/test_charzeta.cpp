#include "grw/charzeta.hpp"

#include "doctest.h"

#include <map>

TEST_SUITE_BEGIN("charzeta");

using namespace grw;
using namespace grw::zeta;
using namespace grw::rep;
using gamma::ChernMono;
using gamma::GammaFiltration;

namespace {

std::shared_ptr<RepRing> ring_of(const std::string& g)
{
    return std::make_shared<RepRing>(catalog(g), Field::Real);
}

int idx(const RepRing& r, const std::string& name)
{
    for (int i = 0; i < r.rank(); ++i)
        if (r.name(i) == name)
            return i;
    REQUIRE(false);
    return -1;
}

ChernMono cmono(std::initializer_list<std::pair<std::pair<int, int>, int>> ps)
{
    ChernMono m;
    for (auto& p : ps)
        m.powers.push_back(p);
    return m;
}

}  // namespace

TEST_CASE("the character is an isomorphism for elementary abelian groups")
{
    for (int r = 1; r <= 3; ++r) {
        auto ring = ring_of("z2^" + std::to_string(r));
        GammaFiltration gf(ring);
        auto model = model_for(ring, 6);
        auto rep = omega(gf, *model, 6);
        CHECK(rep.well_defined);
        CHECK(rep.injective);
        CHECK(rep.surjective);
    }
}

TEST_CASE("cyclic kernel")
{
    auto ring = ring_of("c4");
    GammaFiltration gf(ring);
    auto model = model_for(ring, 8);
    auto rep = omega(gf, *model, 8);
    CHECK(rep.well_defined);
    // kernel dims 0 0 1 0 1 0 1 0
    for (int n = 1; n <= 8; ++n)
        CHECK(rep.at(n).kernel_dim == ((n >= 3 && n % 2 == 1) ? 1 : 0));
    int ieps = idx(*ring, "eps"), ir1 = idx(*ring, "r1");
    CHECK(kernel_generated_by(gf, rep, {cmono({{{ieps, 1}, 1}, {{ir1, 2}, 1}})}, 8));
    // and not by the square alone
    CHECK_FALSE(kernel_generated_by(gf, rep, {cmono({{{ieps, 1}, 2}})}, 8));
}

TEST_CASE("dihedral kernel")
{
    auto ring = ring_of("d4");
    GammaFiltration gf(ring);
    auto model = model_for(ring, 8);
    auto rep = omega(gf, *model, 8);
    CHECK(rep.well_defined);
    int ir1 = idx(*ring, "r1"), ir2 = idx(*ring, "r2"), iD = idx(*ring, "Delta");
    CHECK(kernel_generated_by(gf, rep,
                              {cmono({{{ir1, 1}, 1}, {{iD, 2}, 1}}),
                               cmono({{{ir2, 1}, 1}, {{iD, 2}, 1}})},
                              8));
}

TEST_CASE("the character sends Chern classes to Stiefel-Whitney classes")
{
    for (const char* g : {"c4", "c6", "z2^2", "d4"}) {
        auto ring = ring_of(g);
        GammaFiltration gf(ring);
        auto model = model_for(ring, 6);
        auto rep = omega(gf, *model, 6);
        REQUIRE(rep.well_defined);
        for (int i = 0; i < ring->rank(); ++i) {
            if (i == ring->trivial_index())
                continue;
            for (int k = 1; k <= ring->dim(i); ++k) {
                ChernMono m = cmono({{{i, k}, 1}});
                auto cls = gf.mod2_coords(k, gf.chern_monomial(m));
                CHECK(rep.at(k).map.mul_left(cls) == model->w_monomial(m));
            }
        }
    }
}

TEST_CASE("multiplicativity on basis classes")
{
    auto ring = ring_of("d4");
    GammaFiltration gf(ring);
    auto model = model_for(ring, 6);
    auto rep = omega(gf, *model, 6);
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = n1; n1 + n2 <= 6; ++n2)
            for (const auto& m1 : gf.chern_basis(n1).monos)
                for (const auto& m2 : gf.chern_basis(n2).monos) {
                    auto prod = gf.gr_product(gf.chern_monomial(m1), gf.chern_monomial(m2));
                    auto lhs = rep.at(n1 + n2).map.mul_left(
                        gf.mod2_coords(n1 + n2, prod));
                    // product of the w-images computed in the model
                    ChernMono joint = m1;
                    for (const auto& p : m2.powers) {
                        bool merged = false;
                        for (auto& q : joint.powers)
                            if (q.first == p.first) {
                                q.second += p.second;
                                merged = true;
                            }
                        if (!merged)
                            joint.powers.push_back(p);
                    }
                    std::sort(joint.powers.begin(), joint.powers.end());
                    CHECK(lhs == model->w_monomial(joint));
                }
}

TEST_CASE("reference data for the W-group catalog")
{
    auto cases = zeta_catalog();
    CHECK(cases.size() == 6);
    for (const auto& c : cases)
        CHECK_FALSE(c.provenance.empty());
    CHECK(find_case("dihedral").has_value());
    CHECK_FALSE(find_case("nope").has_value());
}

TEST_CASE("comparison map dimensions")
{
    for (const char* name : {"finite-field", "real-closed", "dihedral", "c-field-2"}) {
        auto c = find_case(name);
        auto rep = zeta_case(*c, 6);
        CHECK(rep.dims_match);
        CHECK(rep.iso_degree1);
        CHECK(rep.iso_degree2);
    }
}

TEST_CASE("relation images vanish")
{
    auto mm = matsumoto_checks();
    CHECK(mm.dihedral_product_zero);
    CHECK(mm.cyclic_square_zero);
    CHECK(mm.complex_double_zero);
    CHECK(mm.ok());
}

TEST_CASE("commuting squares")
{
    for (const char* name : {"real-closed", "dihedral", "finite-field"}) {
        auto c = find_case(name);
        auto sq = square_diagram_check(*c, 6);
        CHECK(sq.commutes);
        CHECK(sq.checked > 0);
    }
}

TEST_CASE("field formula for the distinguished operations")
{
    for (int n = 1; n <= 7; ++n)
        CHECK(theta_on_galois_model(n));
}

namespace {

// character table of a subgroup given by its element list, through
// the JSON constructor (abelian subgroups get their duals computed)
CharTable subgroup_table(const FiniteGroup& big, const std::vector<int>& elems)
{
    std::map<int, int> index;
    for (size_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = static_cast<int>(i);
    std::string json = "{\"order\": " + std::to_string(elems.size()) + ", \"table\": [";
    for (size_t i = 0; i < elems.size(); ++i) {
        json += i ? ",[" : "[";
        for (size_t j = 0; j < elems.size(); ++j) {
            int prod = big.mul(elems[i], elems[j]);
            REQUIRE(index.count(prod));
            json += (j ? "," : "") + std::to_string(index[prod]);
        }
        json += "]";
    }
    json += "]}";
    return group_from_json(json);
}

// restriction of virtual characters along the inclusion, as integer
// vectors over the subgroup basis; the canonical eigenvalue multisets
// are re-expressed at the subgroup exponent
std::vector<VirtualRep> restriction_rows(const RepRing& big, const RepRing& sub,
                                         const std::vector<int>& elems)
{
    int e_big = big.complex_table().e;
    int e_sub = sub.complex_table().e;
    REQUIRE(e_big % e_sub == 0);
    int ratio = e_big / e_sub;
    std::vector<VirtualRep> rows;
    for (int i = 0; i < big.rank(); ++i) {
        auto big_vals = big.values(big.irreducible(i));
        std::vector<Cyclo> vals;
        for (int c = 0; c < sub.group().class_count(); ++c) {
            int g = elems[sub.group().class_rep(c)];
            const Cyclo& v = big_vals[big.group().class_of(g)];
            Cyclo w(e_sub);
            for (int k = 0; k < e_big; ++k) {
                if (v.coeff(k) == 0)
                    continue;
                REQUIRE(k % ratio == 0);  // eigenvalues of a subgroup element
                w += Cyclo::root(e_sub, k / ratio) * v.coeff(k);
            }
            vals.push_back(w);
        }
        auto dec = sub.decompose(vals);
        REQUIRE(dec.has_value());
        VirtualRep row(sub.rank(), 0);
        for (int k = 0; k < sub.rank(); ++k) {
            REQUIRE((*dec)[k].get_den() == 1);
            row[k] = (*dec)[k].get_num();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

VirtualRep apply_rows(const std::vector<VirtualRep>& rows, const VirtualRep& x)
{
    VirtualRep out(rows[0].size(), 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (size_t k = 0; k < out.size(); ++k)
            out[k] += x[i] * rows[i][k];
    }
    return out;
}

}  // namespace

TEST_CASE("the character commutes with restriction to the detecting subgroups")
{
    const int D = 5;
    auto ring = ring_of("d4");
    GammaFiltration gf(ring);
    auto model = model_for(ring, D);
    auto om = omega(gf, *model, D);
    REQUIRE(om.well_defined);
    grw::swq::D4Model d4model(D);

    // elements indexed a^i b^j -> i + 4j: the rotation subgroup and
    // the Klein subgroup on which r2 restricts trivially
    struct Sub {
        std::vector<int> elems;
        bool is_klein;
    };
    for (const Sub& sub : {Sub{{0, 1, 2, 3}, false}, Sub{{0, 2, 5, 7}, true}}) {
        CharTable ct = subgroup_table(ring->group(), sub.elems);
        auto sring = std::make_shared<RepRing>(ct, Field::Real);
        GammaFiltration sgf(sring);
        auto smodel = model_for(sring, D);
        auto som = omega(sgf, *smodel, D);
        REQUIRE(som.well_defined);
        auto rows = restriction_rows(*ring, *sring, sub.elems);

        // the restriction respects the filtration
        for (int n = 1; n <= D; ++n)
            for (const auto& v : gf.gamma_lattice(n).basis())
                CHECK(sgf.gamma_lattice(n).contains(apply_rows(rows, v)));

        // Stiefel-Whitney data of the restricted generators, written
        // in the subgroup model's own coordinates
        using grw::poly::PolyF2;
        int ir1 = idx(*ring, "r1"), ir2 = idx(*ring, "r2"), iD = idx(*ring, "Delta");
        PolyF2 w_r1 = PolyF2::zero(2), w_r2 = PolyF2::zero(2), w2_delta = PolyF2::zero(2);
        if (sub.is_klein) {
            // greedy element basis, as in the model factory
            std::vector<int> gens;  // subgroup indices
            {
                const auto& G = sring->group();
                std::vector<char> in_span(G.order(), 0);
                in_span[0] = 1;
                int span = 1;
                while (span < G.order()) {
                    int pick = -1;
                    for (int g = 0; g < G.order() && pick < 0; ++g)
                        if (!in_span[g])
                            pick = g;
                    gens.push_back(pick);
                    std::vector<int> old;
                    for (int g = 0; g < G.order(); ++g)
                        if (in_span[g])
                            old.push_back(g);
                    for (int s : old) {
                        int t = G.mul(s, pick);
                        if (!in_span[t]) {
                            in_span[t] = 1;
                            ++span;
                        }
                    }
                }
            }
            auto line_form = [&](auto value_at_subelt) {
                PolyF2 out = PolyF2::zero(2);
                for (size_t v = 0; v < gens.size(); ++v)
                    if (value_at_subelt(gens[v]) == -1)
                        out += PolyF2::var(2, static_cast<int>(v));
                return out;
            };
            auto big_value = [&](int irr, int sub_elt) {
                auto vals = ring->values(ring->irreducible(irr));
                mpq_class q;
                REQUIRE(vals[ring->group().class_of(sub.elems[sub_elt])]
                            .is_rational_value(q));
                return q;
            };
            w_r1 = line_form([&](int g) { return big_value(ir1, g); });
            w_r2 = line_form([&](int g) { return big_value(ir2, g); });
            // Delta restricts to a sum of two subgroup lines; w_2 is
            // the product of their first classes
            w2_delta = PolyF2::one(2);
            const VirtualRep& drow = rows[iD];
            for (int k = 0; k < sring->rank(); ++k)
                for (mpz_class c = 0; c < drow[k]; ++c) {
                    auto svals = sring->values(sring->irreducible(k));
                    w2_delta = w2_delta * line_form([&](int g) {
                        mpq_class q;
                        REQUIRE(svals[sring->group().class_of(g)].is_rational_value(q));
                        return q;
                    });
                }
        }

        // cohomology-side restriction of a quotient class
        auto res_coh = [&](int n, const std::vector<uint8_t>& quot_coords) {
            PolyF2 klein_img = PolyF2::zero(2);
            int c4_img = 0;  // coefficient of x^(n%2) y^(n/2)
            const auto& qb = d4model.quotient_basis(n);
            for (size_t k = 0; k < quot_coords.size(); ++k) {
                if (!quot_coords[k])
                    continue;
                auto m = d4model.basis(n)[qb[k]];
                if (sub.is_klein) {
                    klein_img += w_r1.pow(m.p) * w_r2.pow(m.q) * w2_delta.pow(m.s);
                }
                else {
                    if (m.p + m.q <= 1)
                        c4_img ^= 1;  // W1, W2 restrict to x; W to y
                }
            }
            if (sub.is_klein) {
                // subset-algebra coordinates, masks ascending
                grw::swq::SubsetAlgElt reduced = grw::swq::reduce_elem_abelian(klein_img);
                std::vector<uint8_t> out;
                for (uint64_t mask = 1; mask < 4; ++mask) {
                    int pc = (mask == 3) ? 2 : 1;
                    if (pc > n)
                        continue;
                    uint8_t bit = 0;
                    for (const auto& t : reduced.terms())
                        if (t.mask == mask && t.deg == n)
                            bit ^= 1;
                    out.push_back(bit);
                }
                return out;
            }
            grw::swq::C4Model cyc(D);
            std::vector<uint8_t> out;
            if (cyc.quotient_dim(n) == 1)
                out.push_back(static_cast<uint8_t>(c4_img));
            return out;
        };

        for (int n = 1; n <= D; ++n) {
            for (const auto& mono : gf.chern_basis(n).monos) {
                auto cls = gf.chern_monomial(mono);
                // restrict, then apply the subgroup character
                auto res_rep = apply_rows(rows, cls.representative);
                auto path_a = som.at(n).map.mul_left(
                    sgf.mod2_coords(n, sgf.project(n, res_rep)));
                // apply the character, then restrict the cohomology class
                auto path_b = res_coh(n, om.at(n).map.mul_left(gf.mod2_coords(n, cls)));
                CHECK(path_a == path_b);
            }
        }
    }
}

TEST_SUITE_END();
