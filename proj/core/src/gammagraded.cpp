#include "grw/gammagraded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grw::gamma {

using lattice::IntegerLattice;
using lattice::QuotientStructure;
using lattice::Vec;
using rep::RepRing;
using rep::VirtualRep;

int64_t ChernMono::degree() const
{
    int64_t d = 0;
    for (const auto& [gen, mult] : powers)
        d += int64_t(gen.second) * mult;
    return d;
}

std::string ChernMono::str(const RepRing& ring) const
{
    if (powers.empty())
        return "1";
    std::ostringstream os;
    bool any = false;
    for (const auto& [gen, mult] : powers) {
        if (any)
            os << " ";
        any = true;
        os << "c" << gen.second << "(" << ring.name(gen.first) << ")";
        if (mult > 1)
            os << "^" << mult;
    }
    return os.str();
}

GammaFiltration::GammaFiltration(std::shared_ptr<const RepRing> ring) : ring_(std::move(ring))
{
    const RepRing& R = *ring_;
    for (int i = 0; i < R.rank(); ++i) {
        if (i == R.trivial_index())
            continue;
        VirtualRep x = R.irreducible(i);
        x[R.trivial_index()] -= R.dim(i);
        for (int k = 1; k <= R.dim(i); ++k)
            atoms_.push_back(Atom{i, k, R.gamma(k, x)});
        // the levels above the dimension vanish; checked, not assumed
        for (int k = R.dim(i) + 1; k <= R.dim(i) + 2; ++k)
            if (!(R.gamma(k, x) == R.zero()))
                throw std::logic_error("gamma above the dimension did not vanish");
        wmax_ = std::max(wmax_, R.dim(i));
    }
}

const IntegerLattice& GammaFiltration::weight_span(int w)
{
    while (static_cast<int>(weight_spans_.size()) <= w) {
        int next = static_cast<int>(weight_spans_.size());
        IntegerLattice l(ring_->rank());
        if (next == 0) {
            l.add(ring_->unit());
        }
        else {
            for (const Atom& a : atoms_) {
                if (a.level > next)
                    continue;
                for (const auto& row : weight_spans_[next - a.level].basis())
                    l.add(ring_->mul(a.value, row));
            }
        }
        weight_spans_.push_back(std::move(l));
    }
    return weight_spans_[w];
}

lattice::IntegerLattice GammaFiltration::seed_lattice(int n, int extra)
{
    IntegerLattice seed(ring_->rank());
    for (int w = n; w <= n + wmax_ - 1 + extra; ++w)
        seed.add_all(weight_span(w).basis());
    return seed;
}

lattice::IntegerLattice GammaFiltration::saturate(IntegerLattice l, int* rounds) const
{
    int r = 0;
    for (;;) {
        ++r;
        if (r > 500)
            throw std::logic_error("gamma saturation did not stabilise");
        bool grew = false;
        lattice::Mat snapshot = l.basis();
        for (const Atom& a : atoms_)
            for (const auto& row : snapshot)
                grew |= l.add(ring_->mul(a.value, row));
        if (!grew)
            break;
    }
    if (rounds)
        *rounds = r;
    return l;
}

const IntegerLattice& GammaFiltration::gamma_lattice(int n)
{
    if (n < 0)
        throw std::invalid_argument("gamma index must be non-negative");
    auto it = gamma_.find(n);
    if (it != gamma_.end())
        return it->second;
    if (n == 0)
        return gamma_.emplace(0, IntegerLattice::full(ring_->rank())).first->second;
    int rounds = 0;
    IntegerLattice l = saturate(seed_lattice(n, 0), &rounds);
    rounds_[n] = rounds;
    return gamma_.emplace(n, std::move(l)).first->second;
}

int GammaFiltration::saturation_rounds(int n)
{
    gamma_lattice(n);
    auto it = rounds_.find(n);
    return it == rounds_.end() ? 0 : it->second;
}

bool GammaFiltration::window_soundness(int n, int extra)
{
    if (n < 1)
        return true;
    IntegerLattice wider = saturate(seed_lattice(n, extra), nullptr);
    return wider == gamma_lattice(n);
}

const QuotientStructure& GammaFiltration::gr_piece(int n)
{
    auto it = pieces_.find(n);
    if (it != pieces_.end())
        return it->second;
    const IntegerLattice& outer = gamma_lattice(n);
    const IntegerLattice& inner = gamma_lattice(n + 1);
    return pieces_.emplace(n, QuotientStructure(outer, inner)).first->second;
}

GrClass GammaFiltration::project(int n, const VirtualRep& v)
{
    return GrClass{n, v, gr_piece(n).project(v)};
}

GrClass GammaFiltration::chern(int k, int irr)
{
    const RepRing& R = *ring_;
    VirtualRep x = R.irreducible(irr);
    x[R.trivial_index()] -= R.dim(irr);
    return project(k, R.gamma(k, x));
}

rep::VirtualRep GammaFiltration::atom_power_product(const ChernMono& m) const
{
    const RepRing& R = *ring_;
    VirtualRep acc = R.unit();
    for (const auto& [gen, mult] : m.powers) {
        VirtualRep x = R.irreducible(gen.first);
        x[R.trivial_index()] -= R.dim(gen.first);
        VirtualRep g = R.gamma(gen.second, x);
        for (int c = 0; c < mult; ++c)
            acc = R.mul(acc, g);
    }
    return acc;
}

GrClass GammaFiltration::chern_monomial(const ChernMono& m)
{
    return project(static_cast<int>(m.degree()), atom_power_product(m));
}

GrClass GammaFiltration::gr_product(const GrClass& a, const GrClass& b)
{
    return project(a.degree + b.degree, ring_->mul(a.representative, b.representative));
}

std::vector<ChernMono> GammaFiltration::chern_monomials(int degree)
{
    const RepRing& R = *ring_;
    std::vector<std::pair<int, int>> gens;  // (irr, k)
    for (int i = 0; i < R.rank(); ++i) {
        if (i == R.trivial_index())
            continue;
        for (int k = 1; k <= R.dim(i); ++k)
            gens.emplace_back(i, k);
    }
    std::vector<ChernMono> out;
    ChernMono cur;
    // monomials using earlier generators first, highest powers first
    auto rec = [&](auto&& self, size_t g, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (g == gens.size())
            return;
        int k = gens[g].second;
        for (int mult = rem / k; mult >= 1; --mult) {
            cur.powers.emplace_back(gens[g], mult);
            self(self, g + 1, rem - mult * k);
            cur.powers.pop_back();
        }
        self(self, g + 1, rem);
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<ChernMono> GammaFiltration::line_monomials(int n)
{
    const RepRing& R = *ring_;
    std::vector<int> lines;
    for (int i : R.line_indices())
        if (i != R.trivial_index())
            lines.push_back(i);
    std::vector<ChernMono> out;
    ChernMono cur;
    auto rec = [&](auto&& self, size_t g, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (g == lines.size())
            return;
        self(self, g + 1, rem);
        for (int mult = 1; mult <= rem; ++mult) {
            cur.powers.emplace_back(std::make_pair(lines[g], 1), mult);
            self(self, g + 1, rem - mult);
            cur.powers.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

const GammaFiltration::GrMod2& GammaFiltration::gr_mod2(int n)
{
    auto it = mod2_.find(n);
    if (it != mod2_.end())
        return it->second;

    GrMod2 m;
    m.degree = n;
    const QuotientStructure& piece = gr_piece(n);
    for (size_t k = 0; k < piece.factors().size(); ++k)
        if (piece.factors()[k] == 0 || piece.factors()[k] % 2 == 0)
            m.summands.push_back(static_cast<int>(k));
    m.dim = static_cast<int>(m.summands.size());
    return mod2_.emplace(n, std::move(m)).first->second;
}

const GammaFiltration::ChernBasis& GammaFiltration::chern_basis(int n)
{
    auto it = chern_bases_.find(n);
    if (it != chern_bases_.end())
        return it->second;

    const GrMod2& m = gr_mod2(n);
    ChernBasis b;
    b.coords = f2::Matrix(0, m.dim);
    if (n >= 1 && m.dim > 0) {
        int rank = 0;
        for (const ChernMono& mono : chern_monomials(n)) {
            auto coords = mod2_coords(n, chern_monomial(mono));
            f2::Matrix trial = b.coords;
            trial.append_row(coords);
            if (trial.rank() > rank) {
                ++rank;
                b.monos.push_back(mono);
                b.coords.append_row(coords);
                if (rank == m.dim)
                    break;
            }
        }
        if (b.coords.rank() != m.dim)
            throw std::logic_error("Chern monomials do not span gr mod 2");
    }
    return chern_bases_.emplace(n, std::move(b)).first->second;
}

std::vector<uint8_t> GammaFiltration::mod2_coords(int n, const GrClass& c)
{
    const GrMod2& m = gr_mod2(n);
    std::vector<uint8_t> coords;
    coords.reserve(m.summands.size());
    for (int s : m.summands) {
        mpz_class r = c.residues.at(s) % 2;
        coords.push_back(r != 0);
    }
    return coords;
}

f2::Matrix GammaFiltration::dec_span(int n)
{
    const GrMod2& m = gr_mod2(n);
    f2::Matrix rows(0, m.dim);
    for (const ChernMono& mono : line_monomials(n))
        rows.append_row(mod2_coords(n, chern_monomial(mono)));
    rows.rref();
    return rows;
}

int GammaFiltration::dec_dim(int n)
{
    return dec_span(n).rank();
}

GammaFiltration::TorsionReport GammaFiltration::torsion_and_adams_checks(
    int n_max, const std::vector<int64_t>& ks)
{
    TorsionReport rep;
    std::ostringstream details;
    const RepRing& R = *ring_;
    mpz_class order = R.group().order();
    for (int n = 1; n <= n_max; ++n) {
        mpz_class bound = 1;
        for (int i = 0; i < n; ++i)
            bound *= order;
        for (const auto& f : gr_piece(n).factors()) {
            if (f == 0 || bound % f != 0) {
                rep.torsion_ok = false;
                details << "factor " << f.get_str() << " in degree " << n
                        << " does not divide |G|^n; ";
            }
        }
        const IntegerLattice& next = gamma_lattice(n + 1);
        for (const auto& row : gamma_lattice(n).basis()) {
            for (int64_t k : ks) {
                VirtualRep lhs = R.adams(k, row);
                mpz_class kn = 1;
                for (int i = 0; i < n; ++i)
                    kn *= k;
                for (size_t j = 0; j < lhs.size(); ++j)
                    lhs[j] -= kn * row[j];
                if (!next.contains(lhs)) {
                    rep.adams_ok = false;
                    details << "Adams congruence fails in degree " << n << " for k=" << k
                            << "; ";
                }
            }
        }
    }
    rep.details = details.str();
    return rep;
}

}  // namespace grw::gamma
