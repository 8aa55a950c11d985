#include "grw/steenrod.hpp"

#include "grw/f2matrix.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

namespace grw::steenrod {

void Caps::check(int64_t d, const char* where) const
{
    if (d > degree) {
        std::ostringstream os;
        os << where << ": degree " << d << " exceeds cap " << degree;
        throw cap_error(os.str());
    }
}

// |xi_i| = 2^i - 1, i >= 1.
static int64_t xi_degree(int i)
{
    if (i > 62)
        throw cap_error("xi index out of range");
    return (int64_t(1) << i) - 1;
}

MilnorElt::MilnorElt(std::vector<int64_t> exps) : r(std::move(exps))
{
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    for (int64_t v : r)
        if (v < 0)
            throw std::invalid_argument("Milnor exponents must be non-negative");
}

MilnorElt MilnorElt::sq(int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("Sq^k needs k >= 0");
    if (k == 0)
        return unit();
    return MilnorElt{{k}};
}

int64_t MilnorElt::degree() const
{
    int64_t d = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t w = xi_degree(static_cast<int>(i) + 1);
        if (r[i] != 0 && (r[i] > std::numeric_limits<int64_t>::max() / w ||
                          d > std::numeric_limits<int64_t>::max() - r[i] * w))
            throw cap_error("degree overflow");
        d += r[i] * w;
    }
    return d;
}

std::string MilnorElt::str() const
{
    if (is_unit())
        return "1";
    std::ostringstream os;
    os << "Sq(";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i)
            os << ",";
        os << r[i];
    }
    os << ")";
    return os.str();
}

bool milnor_before(const MilnorElt& a, const MilnorElt& b)
{
    size_t n = std::min(a.r.size(), b.r.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.r[i] != b.r[i])
            return a.r[i] > b.r[i];
    }
    return a.r.size() < b.r.size();
}

SteenrodOp::SteenrodOp(std::vector<MilnorElt> terms) : terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end(), milnor_before);
    // F2: drop pairs of equal terms.
    std::vector<MilnorElt> out;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i])
            ++j;
        if ((j - i) % 2)
            out.push_back(terms_[i]);
        i = j;
    }
    terms_.swap(out);
}

bool SteenrodOp::contains(const MilnorElt& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, milnor_before);
    return it != terms_.end() && *it == m;
}

bool SteenrodOp::homogeneous() const
{
    if (terms_.empty())
        return true;
    int64_t d = terms_[0].degree();
    for (const auto& t : terms_)
        if (t.degree() != d)
            return false;
    return true;
}

int64_t SteenrodOp::degree() const
{
    if (terms_.empty())
        throw std::logic_error("degree of the zero operation");
    if (!homogeneous())
        throw std::logic_error("degree of a non-homogeneous operation");
    return terms_[0].degree();
}

SteenrodOp& SteenrodOp::operator+=(const SteenrodOp& o)
{
    std::vector<MilnorElt> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i] == o.terms_[j]) {
            ++i, ++j;  // cancels
        }
        else if (milnor_before(terms_[i], o.terms_[j])) {
            merged.push_back(terms_[i++]);
        }
        else {
            merged.push_back(o.terms_[j++]);
        }
    }
    merged.insert(merged.end(), terms_.begin() + i, terms_.end());
    merged.insert(merged.end(), o.terms_.begin() + j, o.terms_.end());
    terms_.swap(merged);
    return *this;
}

std::string SteenrodOp::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            os << " + ";
        os << terms_[i].str();
    }
    return os.str();
}

std::vector<MilnorElt> enumerate_milnor_basis(int64_t d, const Caps& caps)
{
    if (d < 0)
        throw std::invalid_argument("negative degree");
    caps.check(d, "enumerate_milnor_basis");

    std::vector<MilnorElt> out;
    std::vector<int64_t> cur;
    // Choose r_i for i = 1, 2, ... as long as |xi_i| fits the budget.
    auto rec = [&](auto&& self, int i, int64_t rem) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (xi_degree(i) > rem)
            return;
        int64_t w = xi_degree(i);
        for (int64_t v = 0; v * w <= rem; ++v) {
            cur.push_back(v);
            self(self, i + 1, rem - v * w);
            cur.pop_back();
        }
    };
    rec(rec, 1, d);
    std::sort(out.begin(), out.end(), milnor_before);
    return out;
}

// Milnor product of Sq(a) and Sq(b): sum over matrices X = (x_{ij}),
// i, j >= 0, (0,0) unused, with
//     a_i = sum_j 2^j x_{ij}   (weighted row sums, i >= 1)
//     b_j = sum_i x_{ij}       (column sums, j >= 1)
// contributing Sq(t) with t_n = sum_{i+j=n} x_{ij}, provided every
// diagonal multinomial (x_{0n}, x_{1,n-1}, ..., x_{n0}) is odd, which
// happens exactly when the entries add without binary carries.
SteenrodOp milnor_product(const MilnorElt& a, const MilnorElt& b)
{
    const int m = static_cast<int>(a.r.size());
    const int n = static_cast<int>(b.r.size());
    if (m == 0)
        return SteenrodOp::single(b);
    if (n == 0)
        return SteenrodOp::single(a);

    // x[i][j] for 0 <= i <= m, 0 <= j <= n.
    std::vector<std::vector<int64_t>> x(m + 1, std::vector<int64_t>(n + 1, 0));
    std::vector<int64_t> col_used(n + 1, 0);
    std::vector<MilnorElt> terms;

    auto emit = [&]() {
        // x[0][j] is whatever remains of b_j.
        for (int j = 1; j <= n; ++j)
            x[0][j] = b.r[j - 1] - col_used[j];
        std::vector<int64_t> t(m + n, 0);
        for (int d = 1; d <= m + n; ++d) {
            int64_t acc = 0;
            for (int i = std::max(0, d - n); i <= std::min(d, m); ++i) {
                int64_t e = x[i][d - i];
                if (acc & e)
                    return;  // binary carry: even multinomial
                acc |= e;
            }
            t[d - 1] = acc;
        }
        terms.emplace_back(std::move(t));
    };

    // Fill rows i = 1..m; in row i choose x[i][j] for j = 1..n, the
    // leftover being x[i][0] = a_i - sum 2^j x[i][j] >= 0.
    auto rec_row = [&](auto&& self, int i, int j, int64_t rem) -> void {
        if (i > m) {
            emit();
            return;
        }
        if (j > n) {
            x[i][0] = rem;
            self(self, i + 1, 1, i + 1 <= m ? a.r[i] : 0);
            return;
        }
        int64_t w = int64_t(1) << j;
        int64_t max_v = std::min(rem / w, b.r[j - 1] - col_used[j]);
        for (int64_t v = 0; v <= max_v; ++v) {
            x[i][j] = v;
            col_used[j] += v;
            self(self, i, j + 1, rem - v * w);
            col_used[j] -= v;
        }
        x[i][j] = 0;
    };
    rec_row(rec_row, 1, 1, a.r[0]);
    return SteenrodOp(std::move(terms));
}

SteenrodOp product(const SteenrodOp& a, const SteenrodOp& b)
{
    SteenrodOp out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out += milnor_product(ta, tb);
    return out;
}

SteenrodOp theta(int n, const Caps& caps)
{
    if (n < 1)
        throw std::invalid_argument("theta(n) needs n >= 1");
    if (n > 62)
        throw cap_error("theta index out of range");
    int64_t d = (int64_t(1) << (n - 1)) - n;
    caps.check(d, "theta");
    return SteenrodOp(enumerate_milnor_basis(d, caps));
}

// ---- admissible basis ----

AdmissibleMono::AdmissibleMono(std::vector<int64_t> word) : i(std::move(word))
{
    for (size_t k = 0; k < i.size(); ++k) {
        if (i[k] < 1)
            throw std::invalid_argument("admissible entries must be positive");
        if (k + 1 < i.size() && i[k] < 2 * i[k + 1])
            throw std::invalid_argument("not admissible: i_k < 2 i_{k+1}");
    }
}

int64_t AdmissibleMono::degree() const
{
    int64_t d = 0;
    for (int64_t v : i)
        d += v;
    return d;
}

std::string AdmissibleMono::str() const
{
    if (is_unit())
        return "1";
    std::ostringstream os;
    for (size_t k = 0; k < i.size(); ++k) {
        if (k)
            os << " ";
        os << "Sq^" << i[k];
    }
    return os.str();
}

bool admissible_before(const AdmissibleMono& a, const AdmissibleMono& b)
{
    return std::lexicographical_compare(a.i.begin(), a.i.end(), b.i.begin(), b.i.end());
}

SerreCartanOp::SerreCartanOp(std::vector<AdmissibleMono> terms) : terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end(), admissible_before);
    std::vector<AdmissibleMono> out;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i])
            ++j;
        if ((j - i) % 2)
            out.push_back(terms_[i]);
        i = j;
    }
    terms_.swap(out);
}

std::string SerreCartanOp::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            os << " + ";
        os << terms_[i].str();
    }
    return os.str();
}

std::vector<AdmissibleMono> enumerate_admissible(int64_t d, const Caps& caps)
{
    if (d < 0)
        throw std::invalid_argument("negative degree");
    caps.check(d, "enumerate_admissible");

    std::vector<AdmissibleMono> out;
    std::vector<int64_t> cur;
    // Largest degree reachable with every entry <= bound.
    auto reach = [](int64_t bound) {
        int64_t s = 0;
        while (bound >= 1) {
            s += bound;
            bound /= 2;
        }
        return s;
    };
    auto rec = [&](auto&& self, int64_t rem, int64_t bound) -> void {
        if (rem == 0) {
            out.emplace_back(AdmissibleMono(cur));
            return;
        }
        for (int64_t v = std::min(rem, bound); v >= 1; --v) {
            if (reach(v / 2) < rem - v)
                continue;
            cur.push_back(v);
            self(self, rem - v, v / 2);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    std::sort(out.begin(), out.end(), admissible_before);
    return out;
}

SteenrodOp expand_admissible(const AdmissibleMono& m)
{
    SteenrodOp acc = SteenrodOp::unit();
    for (auto it = m.i.rbegin(); it != m.i.rend(); ++it)
        acc = product(SteenrodOp::sq(*it), acc);
    return acc;
}

namespace {

// Per-degree change of basis, built once and cached: index maps for
// both bases plus the inverse of the (admissible -> Milnor) matrix.
struct BasisChange {
    std::vector<MilnorElt> milnor;
    std::vector<AdmissibleMono> admissible;
    f2::Matrix milnor_to_adm;  // square, rows/cols in canonical orders
};

const BasisChange& basis_change(int64_t d, const Caps& caps)
{
    static std::map<int64_t, BasisChange> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;

    BasisChange bc;
    bc.milnor = enumerate_milnor_basis(d, caps);
    bc.admissible = enumerate_admissible(d, caps);
    int nn = static_cast<int>(bc.milnor.size());
    if (static_cast<int>(bc.admissible.size()) != nn)
        throw std::logic_error("basis size mismatch");

    auto milnor_index = [&](const MilnorElt& m) {
        auto pos = std::lower_bound(bc.milnor.begin(), bc.milnor.end(), m, milnor_before);
        assert(pos != bc.milnor.end() && *pos == m);
        return static_cast<int>(pos - bc.milnor.begin());
    };

    f2::Matrix adm_to_milnor(nn, nn);
    for (int k = 0; k < nn; ++k) {
        SteenrodOp e = expand_admissible(bc.admissible[k]);
        for (const auto& t : e.terms())
            adm_to_milnor.set(k, milnor_index(t), true);
    }
    auto inv = adm_to_milnor.inverse();
    if (!inv)
        throw std::logic_error("admissible expansion matrix is singular");
    bc.milnor_to_adm = std::move(*inv);
    return cache.emplace(d, std::move(bc)).first->second;
}

}  // namespace

SerreCartanOp to_serre_cartan(const SteenrodOp& x, const Caps& caps)
{
    if (x.is_zero())
        return SerreCartanOp{};
    if (!x.homogeneous())
        throw std::invalid_argument("to_serre_cartan needs a homogeneous element");
    int64_t d = x.degree();
    caps.check(d, "to_serre_cartan");
    if (d == 0)
        return SerreCartanOp({AdmissibleMono{}});

    const BasisChange& bc = basis_change(d, caps);
    std::vector<uint8_t> v(bc.milnor.size(), 0);
    for (const auto& t : x.terms()) {
        auto pos = std::lower_bound(bc.milnor.begin(), bc.milnor.end(), t, milnor_before);
        v[pos - bc.milnor.begin()] = 1;
    }
    // x = lambda . A with A the admissible expansion matrix, so
    // lambda = x . A^{-1}.
    std::vector<uint8_t> lambda = bc.milnor_to_adm.mul_left(v);
    std::vector<AdmissibleMono> terms;
    for (size_t k = 0; k < lambda.size(); ++k)
        if (lambda[k])
            terms.push_back(bc.admissible[k]);
    return SerreCartanOp(std::move(terms));
}

SteenrodOp from_serre_cartan(const SerreCartanOp& x)
{
    SteenrodOp out;
    for (const auto& t : x.terms())
        out += expand_admissible(t);
    return out;
}

namespace {

// c(Sq^k) in the Milnor basis, memoized; c(Sq^n) = sum_{j<n} Sq^{n-j} c(Sq^j).
const SteenrodOp& conjugate_sq(int64_t k, const Caps& caps)
{
    static std::vector<SteenrodOp> cache{SteenrodOp::unit()};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    caps.check(k, "antipode");
    while (static_cast<int64_t>(cache.size()) <= k) {
        int64_t n = static_cast<int64_t>(cache.size());
        SteenrodOp acc;
        for (int64_t j = 0; j < n; ++j)
            acc += product(SteenrodOp::sq(n - j), cache[j]);
        cache.push_back(std::move(acc));
    }
    return cache[k];
}

}  // namespace

SteenrodOp antipode(const SteenrodOp& x, const Caps& caps)
{
    if (x.is_zero())
        return x;
    if (!x.homogeneous())
        throw std::invalid_argument("antipode needs a homogeneous element");
    SerreCartanOp sc = to_serre_cartan(x, caps);
    SteenrodOp out;
    for (const auto& word : sc.terms()) {
        // anti-homomorphism: c(Sq^{i1} ... Sq^{im}) = c(Sq^{im}) ... c(Sq^{i1})
        SteenrodOp acc = SteenrodOp::unit();
        for (auto it = word.i.rbegin(); it != word.i.rend(); ++it)
            acc = product(acc, conjugate_sq(*it, caps));
        out += acc;
    }
    return out;
}

}  // namespace grw::steenrod
