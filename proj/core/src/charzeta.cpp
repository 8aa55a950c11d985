#include "grw/charzeta.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace grw::zeta {

using gamma::ChernMono;
using gamma::GammaFiltration;
using poly::PolyF2;
using rep::Field;
using rep::RepRing;

namespace {

// ---- polynomial model (elementary abelian targets) ----

class PolyModel final : public CohModel {
public:
    PolyModel(int rank, int max_degree, std::vector<std::vector<PolyF2>> sw,
              std::string label)
        : r_(rank), max_degree_(max_degree), sw_(std::move(sw)), label_(std::move(label))
    {
    }

    int max_degree() const override { return max_degree_; }

    int quotient_dim(int d) const override
    {
        return static_cast<int>(swq::subset_algebra_dim(r_, d));
    }

    std::vector<uint8_t> w_monomial(const ChernMono& m) const override
    {
        PolyF2 acc = PolyF2::one(r_);
        for (const auto& [gen, mult] : m.powers) {
            const auto& ws = sw_.at(gen.first);
            PolyF2 w = gen.second < static_cast<int>(ws.size()) ? ws[gen.second]
                                                                : PolyF2::zero(r_);
            for (int c = 0; c < mult; ++c)
                acc = acc * w;
        }
        return coords(acc, static_cast<int>(m.degree()));
    }

    std::vector<uint8_t> coords(const PolyF2& p, int d) const
    {
        // quotient through the subset algebra
        std::vector<swq::SubsetTerm> symbols;
        for (uint64_t mask = 1; mask < (uint64_t(1) << r_); ++mask)
            if (std::popcount(mask) <= d)
                symbols.push_back(swq::SubsetTerm{mask, d});
        std::sort(symbols.begin(), symbols.end());
        std::vector<uint8_t> out(symbols.size(), 0);
        if (p.is_zero())
            return out;
        swq::SubsetAlgElt img = swq::reduce_elem_abelian(p);
        for (const auto& t : img.terms()) {
            auto it = std::lower_bound(symbols.begin(), symbols.end(), t);
            if (it == symbols.end() || !(*it == t))
                throw std::logic_error("subset symbol out of range");
            out[it - symbols.begin()] ^= 1;
        }
        return out;
    }

    std::string describe() const override { return label_; }

private:
    int r_;
    int max_degree_;
    std::vector<std::vector<PolyF2>> sw_;  // per irreducible: w_0, w_1, ...
    std::string label_;
};

// ---- cyclic model, even 2-part >= 4: F2[x,y]/(x^2) ----

class CyclicEvenModel final : public CohModel {
public:
    // per irreducible: (x-exponent, y-exponent, level k) of the only
    // non-trivial w, or absent
    struct WData {
        int k = 0;  // w_k is the non-trivial class; 0 = all trivial
        int xe = 0, ye = 0;
    };

    CyclicEvenModel(std::vector<WData> sw, int max_degree)
        : c4_(max_degree), sw_(std::move(sw)), max_degree_(max_degree)
    {
    }

    int max_degree() const override { return max_degree_; }
    int quotient_dim(int d) const override { return c4_.quotient_dim(d); }

    std::vector<uint8_t> w_monomial(const ChernMono& m) const override
    {
        int d = static_cast<int>(m.degree());
        std::vector<uint8_t> out(quotient_dim(d), 0);
        int xe = 0, ye = 0;
        for (const auto& [gen, mult] : m.powers) {
            const WData& w = sw_.at(gen.first);
            if (w.k != gen.second)
                return out;  // w_k is zero
            xe += w.xe * mult;
            ye += w.ye * mult;
        }
        if (xe >= 2)
            return out;  // x^2 = 0
        if (xe + 2 * ye != d)
            throw std::logic_error("degree mismatch in the cyclic model");
        if (!out.empty() && !c4_.basis_in_ideal(d))
            out[0] = 1;
        return out;
    }

    std::string describe() const override { return "F2[x,y]/(x^2)"; }

private:
    swq::C4Model c4_;
    std::vector<WData> sw_;
    int max_degree_;
};

// ---- dihedral model ----

class DihedralModel final : public CohModel {
public:
    using MonoD4 = swq::D4Model::MonoD4;
    // per irreducible, per level k: the class as a set of monomials
    using Elt = std::vector<MonoD4>;

    DihedralModel(std::vector<std::vector<Elt>> sw, int max_degree)
        : d4_(max_degree), sw_(std::move(sw)), max_degree_(max_degree)
    {
    }

    int max_degree() const override { return max_degree_; }
    int quotient_dim(int d) const override { return d4_.quotient_dim(d); }
    const swq::D4Model& model() const { return d4_; }

    std::vector<uint8_t> w_monomial(const ChernMono& m) const override
    {
        int d = static_cast<int>(m.degree());
        Elt acc = {MonoD4{0, 0, 0}};
        for (const auto& [gen, mult] : m.powers) {
            const auto& levels = sw_.at(gen.first);
            const Elt& w = gen.second < static_cast<int>(levels.size())
                               ? levels[gen.second]
                               : Elt{};
            for (int c = 0; c < mult; ++c)
                acc = mul(acc, w);
        }
        // coordinates over the degree-d basis, reduced mod the ideal
        std::vector<uint8_t> coords(d4_.dim(d), 0);
        const auto& basis = d4_.basis(d);
        for (const auto& mono : acc) {
            auto it = std::lower_bound(basis.begin(), basis.end(), mono);
            if (it == basis.end() || !(*it == mono))
                throw std::logic_error("dihedral monomial out of range");
            coords[it - basis.begin()] ^= 1;
        }
        return d4_.reduce_to_quotient(std::move(coords), d);
    }

    std::string describe() const override { return "F2[W1,W2,W]/(W1 W2)"; }

private:
    swq::D4Model d4_;
    std::vector<std::vector<Elt>> sw_;
    int max_degree_;

    static Elt mul(const Elt& a, const Elt& b)
    {
        std::vector<MonoD4> acc;
        for (const auto& x : a)
            for (const auto& y : b) {
                auto p = swq::D4Model::mul(x, y);
                if (p)
                    acc.push_back(*p);
            }
        std::sort(acc.begin(), acc.end());
        Elt out;
        for (size_t i = 0; i < acc.size();) {
            size_t j = i;
            while (j < acc.size() && acc[j] == acc[i])
                ++j;
            if ((j - i) % 2)
                out.push_back(acc[i]);
            i = j;
        }
        return out;
    }
};

// value of the irreducible at the class of g, reduced to a rational
mpq_class value_at(const RepRing& ring, int irr, int g)
{
    const auto& ct = ring.complex_table();
    // the ring's basis values, not the complex table: use ring values
    auto vals = ring.values(ring.irreducible(irr));
    mpq_class q;
    if (!vals[ct.group.class_of(g)].is_rational_value(q))
        throw std::logic_error("expected a rational character value");
    return q;
}

// greedy basis of an elementary abelian 2-group
std::vector<int> greedy_basis(const rep::FiniteGroup& G)
{
    std::vector<int> gens;
    std::vector<char> in_span(G.order(), 0);
    in_span[0] = 1;
    int span_size = 1;
    while (span_size < G.order()) {
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
                ++span_size;
            }
        }
    }
    return gens;
}

}  // namespace

std::unique_ptr<CohModel> model_for(const std::shared_ptr<const RepRing>& ring, int D)
{
    const rep::FiniteGroup& G = ring->group();
    if (ring->field() != Field::Real)
        throw std::invalid_argument("cohomology models take real representation rings");

    if (G.abelian() && G.exponent() <= 2) {
        // elementary abelian: w(eps_S) = 1 + sum of the S variables
        std::vector<int> basis = greedy_basis(G);
        int r = static_cast<int>(basis.size());
        std::vector<std::vector<PolyF2>> sw;
        for (int i = 0; i < ring->rank(); ++i) {
            PolyF2 w1 = PolyF2::zero(r);
            for (int v = 0; v < r; ++v)
                if (value_at(*ring, i, basis[v]) == -1)
                    w1 += PolyF2::var(r, v);
            sw.push_back({PolyF2::one(r), w1});
        }
        return std::make_unique<PolyModel>(r, D, std::move(sw), "F2[t1..t" +
                                                                     std::to_string(r) + "]");
    }

    // cyclic?
    bool cyclic = false;
    int gen = -1;
    for (int g = 0; g < G.order(); ++g)
        if (G.element_order(g) == G.order()) {
            cyclic = true;
            gen = g;
            break;
        }
    if (cyclic) {
        int N = G.order();
        int two_part = N & (-N);
        if (two_part == 1) {
            // odd order: the quotient is F2 in degree 0
            std::vector<std::vector<PolyF2>> sw(ring->rank(), {PolyF2::one(0)});
            return std::make_unique<PolyModel>(0, D, std::move(sw), "F2");
        }
        int z = G.power(gen, N / 2);  // the order-2 element
        if (two_part == 2) {
            // cohomology of the 2-part: F2[t]
            std::vector<std::vector<PolyF2>> sw;
            for (int i = 0; i < ring->rank(); ++i) {
                if (ring->dim(i) == 1) {
                    PolyF2 w1 = value_at(*ring, i, z) == -1 ? PolyF2::var(1, 0)
                                                            : PolyF2::zero(1);
                    sw.push_back({PolyF2::one(1), w1});
                }
                else {
                    // two-dimensional r_k: restricted to the order-2
                    // subgroup it is twice a line
                    PolyF2 w2 = value_at(*ring, i, z) == -2
                                    ? PolyF2::var(1, 0) * PolyF2::var(1, 0)
                                    : PolyF2::zero(1);
                    sw.push_back({PolyF2::one(1), PolyF2::zero(1), w2});
                }
            }
            return std::make_unique<PolyModel>(1, D, std::move(sw), "F2[t]");
        }
        // two_part >= 4: F2[x,y]/(x^2)
        std::vector<CyclicEvenModel::WData> sw;
        for (int i = 0; i < ring->rank(); ++i) {
            CyclicEvenModel::WData w;
            if (ring->dim(i) == 1) {
                if (value_at(*ring, i, z) == -1)  // never for two_part >= 4
                    throw std::logic_error("unexpected line restriction");
                // w_1(eps) = x exactly for the non-trivial real line
                if (i != ring->trivial_index())
                    w = {1, 1, 0};
            }
            else {
                if (value_at(*ring, i, z) == -2)
                    w = {2, 0, 1};  // w_2 = y
            }
            sw.push_back(w);
        }
        return std::make_unique<CyclicEvenModel>(std::move(sw), D);
    }

    if (G.order() == 8 && !G.abelian() && ring->rank() == 5) {
        // dihedral of order 8
        using MonoD4 = swq::D4Model::MonoD4;
        auto find = [&](const std::string& n) {
            for (int i = 0; i < ring->rank(); ++i)
                if (ring->name(i) == n)
                    return i;
            throw std::invalid_argument("dihedral table must use the catalog names");
        };
        int ir1 = find("r1"), ir2 = find("r2"), ir3 = find("r3"), iD = find("Delta");
        std::vector<std::vector<DihedralModel::Elt>> sw(
            ring->rank(), std::vector<DihedralModel::Elt>{{MonoD4{0, 0, 0}}});
        sw[ir1].push_back({MonoD4{1, 0, 0}});
        sw[ir2].push_back({MonoD4{0, 1, 0}});
        sw[ir3].push_back({MonoD4{1, 0, 0}, MonoD4{0, 1, 0}});
        sw[iD].push_back({MonoD4{1, 0, 0}, MonoD4{0, 1, 0}});  // w_1 = det line
        sw[iD].push_back({MonoD4{0, 0, 1}});                   // w_2 = W
        sw[find("1")].push_back(DihedralModel::Elt{});
        return std::make_unique<DihedralModel>(std::move(sw), D);
    }

    throw std::invalid_argument("no cohomology model for this group");
}

// ---- omega ----

OmegaReport omega(GammaFiltration& gf, const CohModel& model, int max_degree)
{
    OmegaReport rep;
    for (int n = 1; n <= max_degree; ++n) {
        OmegaDegree od;
        od.degree = n;
        od.source_dim = gf.gr_mod2(n).dim;
        od.target_dim = model.quotient_dim(n);

        auto monos = gf.chern_monomials(n);
        f2::Matrix src(0, od.source_dim), tgt(0, od.target_dim);
        for (const auto& m : monos) {
            src.append_row(gf.mod2_coords(n, gf.chern_monomial(m)));
            tgt.append_row(model.w_monomial(m));
        }
        // well defined: relations between source rows map to zero
        f2::Matrix both(0, od.source_dim + od.target_dim);
        for (int i = 0; i < src.rows(); ++i) {
            std::vector<uint8_t> row = src.row_bits(i);
            auto t = tgt.row_bits(i);
            row.insert(row.end(), t.begin(), t.end());
            both.append_row(row);
        }
        od.well_defined = both.rank() == src.rank();
        od.image_rank = tgt.rank();
        od.kernel_dim = od.source_dim - od.image_rank;

        // kernel: combinations with vanishing target part
        f2::Matrix tgt_first(0, od.target_dim + od.source_dim);
        for (int i = 0; i < src.rows(); ++i) {
            std::vector<uint8_t> row = tgt.row_bits(i);
            auto s = src.row_bits(i);
            row.insert(row.end(), s.begin(), s.end());
            tgt_first.append_row(row);
        }
        tgt_first.rref();
        od.kernel = f2::Matrix(0, od.source_dim);
        for (int i = 0; i < tgt_first.rows(); ++i) {
            bool tgt_zero = true;
            for (int j = 0; j < od.target_dim && tgt_zero; ++j)
                tgt_zero = !tgt_first.get(i, j);
            if (!tgt_zero)
                continue;
            std::vector<uint8_t> s(od.source_dim);
            bool nz = false;
            for (int j = 0; j < od.source_dim; ++j) {
                s[j] = tgt_first.get(i, od.target_dim + j);
                nz |= s[j] != 0;
            }
            if (nz)
                od.kernel.append_row(s);
        }

        // the map on coordinates
        if (od.well_defined) {
            od.map = f2::Matrix(od.source_dim, od.target_dim);
            for (int j = 0; j < od.source_dim; ++j) {
                std::vector<uint8_t> e(od.source_dim, 0);
                e[j] = 1;
                auto x = src.solve_left(e);
                if (!x)
                    throw std::logic_error("Chern monomials fail to span gr mod 2");
                auto img = tgt.mul_left(*x);
                for (int c = 0; c < od.target_dim; ++c)
                    if (img[c])
                        od.map.set(j, c, true);
            }
        }

        rep.well_defined &= od.well_defined;
        rep.injective &= od.kernel_dim == 0;
        rep.surjective &= od.image_rank == od.target_dim;
        rep.degrees.push_back(std::move(od));
    }
    return rep;
}

bool kernel_generated_by(GammaFiltration& gf, const OmegaReport& rep,
                         const std::vector<ChernMono>& gens, int max_degree)
{
    for (int n = 1; n <= max_degree; ++n) {
        const OmegaDegree& od = rep.at(n);
        f2::Matrix span(0, od.source_dim);
        for (const auto& g : gens) {
            int dg = static_cast<int>(g.degree());
            if (dg > n)
                continue;
            gamma::GrClass cg = gf.chern_monomial(g);
            for (const auto& m : gf.chern_monomials(n - dg)) {
                gamma::GrClass cm = gf.chern_monomial(m);
                span.append_row(gf.mod2_coords(n, gf.gr_product(cg, cm)));
            }
        }
        if (!span.same_row_space(od.kernel))
            return false;
    }
    return true;
}

// ---- zeta over the W-group catalog ----

const std::vector<CaseData>& zeta_catalog()
{
    static const std::vector<CaseData> cases = {
        {WGroupCase::FiniteField,
         "finite-field",
         "z4^1",
         {1, 0, 0, 0, 0, 0, 0, 0},
         "stated: concentrated in degrees <= 2; derived: the degree-2 part vanishes"},
        {WGroupCase::RealClosed,
         "real-closed",
         "z2^1",
         {1, 1, 1, 1, 1, 1, 1, 1},
         "stated: one generator in every degree"},
        {WGroupCase::Dihedral,
         "dihedral",
         "d4",
         {2, 2, 2, 2, 2, 2, 2, 2},
         "derived: decomposable part of F2[W1,W2,W]/(W1 W2)"},
        {WGroupCase::CFieldRank1,
         "c-field-1",
         "z4^1",
         {1, 0, 0, 0, 0, 0, 0, 0},
         "derived: exterior algebra on 1 generator"},
        {WGroupCase::CFieldRank2,
         "c-field-2",
         "z4^2",
         {2, 1, 0, 0, 0, 0, 0, 0},
         "derived: exterior algebra on 2 generators"},
        {WGroupCase::CFieldRank3,
         "c-field-3",
         "z4^3",
         {3, 3, 1, 0, 0, 0, 0, 0},
         "derived: exterior algebra on 3 generators"},
    };
    return cases;
}

std::optional<CaseData> find_case(const std::string& name)
{
    for (const auto& c : zeta_catalog())
        if (c.name == name)
            return c;
    return std::nullopt;
}

ZetaReport zeta_case(const CaseData& c, int max_degree)
{
    ZetaReport rep;
    rep.data = c;
    auto ring = std::make_shared<RepRing>(rep::catalog(c.group_name), Field::Real);
    GammaFiltration gf(ring);
    for (int n = 1; n <= max_degree; ++n) {
        int d = gf.dec_dim(n);
        rep.dec_dims.push_back(d);
        int want = n <= static_cast<int>(c.reference_dims.size())
                       ? c.reference_dims[n - 1]
                       : 0;
        if (d != want)
            rep.dims_match = false;
        if (n == 1 && d != want)
            rep.iso_degree1 = false;
        if (n == 2 && d != want)
            rep.iso_degree2 = false;
    }
    return rep;
}

MatsumotoReport matsumoto_checks()
{
    MatsumotoReport rep;
    {
        auto ring = std::make_shared<RepRing>(rep::catalog("d4"), Field::Real);
        GammaFiltration gf(ring);
        int ir1 = -1, ir2 = -1;
        for (int i = 0; i < ring->rank(); ++i) {
            if (ring->name(i) == "r1")
                ir1 = i;
            if (ring->name(i) == "r2")
                ir2 = i;
        }
        rep::VirtualRep prod =
            ring->mul(gf.chern(1, ir1).representative, gf.chern(1, ir2).representative);
        rep.dihedral_product_zero = gf.gamma_lattice(3).contains(prod);
    }
    {
        auto ring = std::make_shared<RepRing>(rep::catalog("z4^1"), Field::Real);
        GammaFiltration gf(ring);
        int ieps = -1;
        for (int i = 0; i < ring->rank(); ++i)
            if (ring->name(i) == "eps")
                ieps = i;
        auto c = gf.chern(1, ieps);
        auto coords = gf.mod2_coords(2, gf.gr_product(c, c));
        rep.cyclic_square_zero = std::all_of(coords.begin(), coords.end(),
                                             [](uint8_t b) { return !b; });
    }
    {
        auto ring = std::make_shared<RepRing>(rep::catalog("c4"), Field::Complex);
        GammaFiltration gf(ring);
        int irho = -1, irho2 = -1;
        for (int i = 0; i < ring->rank(); ++i) {
            if (ring->name(i) == "rho")
                irho = i;
            if (ring->name(i) == "eps")
                irho2 = i;  // rho^2 is the order-2 character
        }
        // c1(rho (x) rho) - 2 c1(rho) lies in Gamma^2, and 2 c1(rho)
        // dies mod 2
        rep::VirtualRep diff = ring->zero();
        diff[irho2] += 1;
        diff[irho] -= 2;
        diff[ring->trivial_index()] += 1;  // (rho^2 - 1) - 2(rho - 1)
        bool congruent = gf.gamma_lattice(2).contains(diff);
        rep::VirtualRep twice = ring->zero();
        twice[irho] = 2;
        twice[ring->trivial_index()] = -2;
        auto coords = gf.mod2_coords(1, gf.project(1, twice));
        bool dies = std::all_of(coords.begin(), coords.end(),
                                [](uint8_t b) { return !b; });
        rep.complex_double_zero = congruent && dies;
    }
    return rep;
}

SquareReport square_diagram_check(const CaseData& c, int max_degree)
{
    SquareReport rep;
    rep.case_name = c.name;
    auto ring = std::make_shared<RepRing>(rep::catalog(c.group_name), Field::Real);
    GammaFiltration gf(ring);
    auto model = model_for(ring, max_degree);
    OmegaReport om = omega(gf, *model, max_degree);
    if (!om.well_defined) {
        rep.commutes = false;
        return rep;
    }
    for (int n = 1; n <= max_degree; ++n) {
        for (const auto& m : gf.line_monomials(n)) {
            auto cls = gf.mod2_coords(n, gf.chern_monomial(m));
            auto path_a = om.at(n).map.mul_left(cls);
            auto path_b = model->w_monomial(m);
            ++rep.checked;
            if (path_a != path_b)
                rep.commutes = false;
        }
    }
    return rep;
}

bool theta_on_galois_model(int n)
{
    PolyF2 tn = PolyF2::var(1, 0).pow(static_cast<uint32_t>(n));
    PolyF2 expect = PolyF2::var(1, 0).pow(uint32_t(1) << (n - 1));
    return poly::theta_action(tn) == expect;
}

}  // namespace grw::zeta
