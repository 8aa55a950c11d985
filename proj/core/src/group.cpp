#include "grw/group.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grw::rep {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table)
{
    FiniteGroup g;
    g.n_ = static_cast<int>(table.size());
    if (g.n_ == 0)
        throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != g.n_)
            throw std::invalid_argument("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= g.n_)
                throw std::invalid_argument("table entry out of range");
    }
    g.table_ = std::move(table);

    // identity = 0
    for (int a = 0; a < g.n_; ++a)
        if (g.table_[0][a] != a || g.table_[a][0] != a)
            throw std::invalid_argument("element 0 is not an identity");
    // associativity over the full table
    for (int a = 0; a < g.n_; ++a)
        for (int b = 0; b < g.n_; ++b)
            for (int c = 0; c < g.n_; ++c)
                if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
                    throw std::invalid_argument("multiplication is not associative");
    // inverses
    g.inv_.assign(g.n_, -1);
    for (int a = 0; a < g.n_; ++a) {
        for (int b = 0; b < g.n_; ++b)
            if (g.table_[a][b] == 0) {
                g.inv_[a] = b;
                break;
            }
        if (g.inv_[a] < 0)
            throw std::invalid_argument("element without inverse");
    }
    // abelian?
    for (int a = 0; a < g.n_ && g.abelian_; ++a)
        for (int b = a + 1; b < g.n_; ++b)
            if (g.table_[a][b] != g.table_[b][a]) {
                g.abelian_ = false;
                break;
            }
    // conjugacy classes
    g.class_of_.assign(g.n_, -1);
    for (int a = 0; a < g.n_; ++a) {
        if (g.class_of_[a] >= 0)
            continue;
        int c = static_cast<int>(g.class_reps_.size());
        g.class_reps_.push_back(a);
        int size = 0;
        for (int s = 0; s < g.n_; ++s) {
            int conj = g.table_[g.table_[s][a]][g.inv_[s]];
            if (g.class_of_[conj] < 0) {
                g.class_of_[conj] = c;
                ++size;
            }
        }
        g.class_sizes_.push_back(size);
    }
    // exponent
    g.exponent_ = 1;
    for (int a = 0; a < g.n_; ++a)
        g.exponent_ = static_cast<int>(std::lcm(g.exponent_, g.element_order(a)));
    return g;
}

int FiniteGroup::power(int g, int64_t k) const
{
    int64_t m = k % n_;  // order of g divides n
    if (m < 0)
        m += n_;
    int acc = 0;
    for (int64_t i = 0; i < m; ++i)
        acc = table_[acc][g];
    return acc;
}

int FiniteGroup::element_order(int g) const
{
    int acc = g, ord = 1;
    while (acc != 0) {
        acc = table_[acc][g];
        ++ord;
    }
    return ord;
}

int CharTable::dim(int i) const
{
    const Cyclo& v = chars.at(i).at(group.class_of(0));
    mpq_class q;
    if (!v.is_rational_value(q) || q.get_den() != 1)
        throw std::logic_error("character dimension is not an integer");
    return static_cast<int>(q.get_num().get_si());
}

void CharTable::validate() const
{
    const FiniteGroup& G = group;
    if (count() != G.class_count())
        throw std::invalid_argument("character count must equal class count");
    for (const auto& row : chars)
        if (static_cast<int>(row.size()) != G.class_count())
            throw std::invalid_argument("character row length mismatch");
    for (int i = 0; i < count(); ++i)
        if (dim(i) < 1)
            throw std::invalid_argument("character with non-positive dimension");

    // first orthogonality: sum_g chi_i(g) conj(chi_j(g)) = |G| delta_ij
    for (int i = 0; i < count(); ++i)
        for (int j = i; j < count(); ++j) {
            Cyclo s(e);
            for (int c = 0; c < G.class_count(); ++c) {
                int cinv = G.class_of(G.inverse(G.class_rep(c)));
                s += (chars[i][c] * chars[j][cinv]) * mpq_class(G.class_size(c));
            }
            mpq_class q;
            if (!s.is_rational_value(q) || q != (i == j ? G.order() : 0))
                throw std::invalid_argument("orthogonality fails for characters " +
                                            std::to_string(i) + "," + std::to_string(j));
        }
}

namespace {

std::vector<std::vector<int>> abelian_table(const std::vector<int>& orders)
{
    int n = 1;
    for (int d : orders) {
        if (d < 1)
            throw std::invalid_argument("factor order must be positive");
        n *= d;
    }
    auto decode = [&](int g) {
        std::vector<int> t(orders.size());
        for (size_t i = 0; i < orders.size(); ++i) {
            t[i] = g % orders[i];
            g /= orders[i];
        }
        return t;
    };
    auto encode = [&](const std::vector<int>& t) {
        int g = 0;
        for (size_t i = orders.size(); i-- > 0;)
            g = g * orders[i] + t[i];
        return g;
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ta = decode(a), tb = decode(b);
            for (size_t i = 0; i < orders.size(); ++i)
                ta[i] = (ta[i] + tb[i]) % orders[i];
            table[a][b] = encode(ta);
        }
    return table;
}

std::string abelian_char_name(const std::vector<int>& orders, const std::vector<int>& j)
{
    bool cyclic = orders.size() == 1;
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i])
            continue;
        if (any)
            os << "*";
        any = true;
        if (cyclic) {
            // rho generates the dual of a cyclic group; eps is the
            // order-2 character when present
            if (2 * j[i] == orders[i]) {
                os << "eps";
            }
            else {
                os << "rho";
                if (j[i] != 1)
                    os << "^" << j[i];
            }
        }
        else {
            os << "e" << (i + 1);
            if (j[i] != 1)
                os << "^" << j[i];
        }
    }
    return any ? os.str() : "1";
}

}  // namespace

CharTable abelian_group(const std::vector<int>& orders)
{
    CharTable ct;
    ct.group = FiniteGroup::from_table(abelian_table(orders));
    ct.e = ct.group.exponent();
    int n = ct.group.order();

    auto decode = [&](int g) {
        std::vector<int> t(orders.size());
        for (size_t i = 0; i < orders.size(); ++i) {
            t[i] = g % orders[i];
            g /= orders[i];
        }
        return t;
    };
    for (int jidx = 0; jidx < n; ++jidx) {
        std::vector<int> j = decode(jidx);
        std::vector<Cyclo> row;
        row.reserve(n);
        for (int c = 0; c < ct.group.class_count(); ++c) {
            std::vector<int> a = decode(ct.group.class_rep(c));
            int64_t k = 0;
            for (size_t i = 0; i < orders.size(); ++i)
                k += int64_t(j[i]) * a[i] * (ct.e / orders[i]);
            row.push_back(Cyclo::root(ct.e, k));
        }
        ct.chars.push_back(std::move(row));
        ct.names.push_back(abelian_char_name(orders, j));
    }
    return ct;
}

CharTable dihedral8()
{
    // <a, b | a^4 = b^2 = 1, b a b = a^3>, elements a^i b^j at index
    // i + 4j.
    int n = 8;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    auto idx = [](int i, int j) { return (i & 3) + 4 * (j & 1); };
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (a^i1 b^j1)(a^i2 b^j2) = a^{i1 + (-1)^{j1} i2} b^{j1+j2}
                    int i = j1 ? (i1 - i2 + 8) & 3 : (i1 + i2) & 3;
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
                }
    CharTable ct;
    ct.group = FiniteGroup::from_table(std::move(table));
    ct.e = ct.group.exponent();  // 4

    // classes: {1}, {a^2}, {a, a^3}, {b, a^2 b}, {ab, a^3 b}
    int n_cls = ct.group.class_count();
    if (n_cls != 5)
        throw std::logic_error("unexpected dihedral class count");
    // canonical eigenvalue representatives: -1 is the root zeta^2
    auto value_row = [&](auto f) {
        std::vector<Cyclo> row(n_cls);
        for (int c = 0; c < n_cls; ++c) {
            int g = ct.group.class_rep(c);
            int i = g & 3, j = g >> 2;
            row[c] = f(i, j) == 1 ? Cyclo::root(ct.e, 0) : Cyclo::root(ct.e, 2);
        }
        return row;
    };
    // r1, r2 restrict non-trivially to the rotation subgroup <a>;
    // r3 = r1 r2 = det of the 2-dimensional representation.
    ct.names = {"1", "r1", "r2", "r3", "Delta"};
    ct.chars.push_back(value_row([](int, int) { return 1; }));
    ct.chars.push_back(value_row([](int i, int j) {
        (void)j;
        return (i % 2) ? -1 : 1;
    }));
    ct.chars.push_back(
        value_row([](int i, int j) { return ((i + j) % 2) ? -1 : 1; }));
    ct.chars.push_back(value_row([](int i, int j) {
        (void)i;
        return (j % 2) ? -1 : 1;
    }));
    // Delta as the canonical eigenvalue multiset: rotations have
    // eigenvalues zeta^i, zeta^-i, reflections +1, -1
    {
        std::vector<Cyclo> drow(n_cls);
        for (int c = 0; c < n_cls; ++c) {
            int g = ct.group.class_rep(c);
            int i = g & 3, j = g >> 2;
            Cyclo v(ct.e);
            if (j == 0) {
                v += Cyclo::root(ct.e, i);
                v += Cyclo::root(ct.e, -i);
            }
            else {
                v += Cyclo::root(ct.e, 0);
                v += Cyclo::root(ct.e, 2);
            }
            drow[c] = v;
        }
        ct.chars.push_back(std::move(drow));
    }
    return ct;
}

CharTable catalog(const std::string& name)
{
    auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
    if (name == "d4" || name == "dihedral8")
        return dihedral8();
    if (starts("cyclic:"))
        return abelian_group({std::stoi(name.substr(7))});
    if (starts("c") && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1])))
        return abelian_group({std::stoi(name.substr(1))});
    if (starts("z2^")) {
        int r = std::stoi(name.substr(3));
        return abelian_group(std::vector<int>(r, 2));
    }
    if (starts("z4^")) {
        int r = std::stoi(name.substr(3));
        return abelian_group(std::vector<int>(r, 4));
    }
    throw std::invalid_argument("unknown group name: " + name);
}

namespace {

// Dual group of an abelian group presented only by its table: pick a
// generating set greedily, enumerate root-of-unity assignments, keep
// the consistent ones.
std::vector<std::vector<Cyclo>> abelian_dual(const FiniteGroup& G, int e)
{
    // greedy generators, largest order first
    std::vector<int> gens;
    std::vector<char> in_span(G.order(), 0);
    in_span[0] = 1;
    int span_size = 1;
    while (span_size < G.order()) {
        int best = -1, best_ord = 0;
        for (int g = 0; g < G.order(); ++g)
            if (!in_span[g] && G.element_order(g) > best_ord) {
                best = g;
                best_ord = G.element_order(g);
            }
        gens.push_back(best);
        // close the span
        std::vector<int> span;
        for (int g = 0; g < G.order(); ++g)
            if (in_span[g])
                span.push_back(g);
        for (int s : span) {
            int acc = s;
            for (int k = 1; k < best_ord; ++k) {
                acc = G.mul(acc, best);
                if (!in_span[acc]) {
                    in_span[acc] = 1;
                    ++span_size;
                }
            }
        }
    }

    std::vector<std::vector<Cyclo>> out;
    std::vector<int> choice(gens.size(), 0);
    std::set<std::vector<int>> seen;  // by value exponents per element
    auto attempt = [&]() {
        // propagate from generators; values as exponents of zeta_e
        std::vector<int> val(G.order(), -1);
        val[0] = 0;
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int g : frontier)
                for (size_t i = 0; i < gens.size(); ++i) {
                    int h = G.mul(g, gens[i]);
                    int ord = G.element_order(gens[i]);
                    int v = (val[g] + choice[i] * (e / ord)) % e;
                    if (val[h] < 0) {
                        val[h] = v;
                        next.push_back(h);
                    }
                    else if (val[h] != v) {
                        return;  // inconsistent assignment
                    }
                }
            frontier = std::move(next);
        }
        // full consistency over the table
        for (int a = 0; a < G.order(); ++a)
            for (int b = 0; b < G.order(); ++b)
                if ((val[a] + val[b]) % e != val[G.mul(a, b)])
                    return;
        if (!seen.insert(val).second)
            return;
        std::vector<Cyclo> row;
        for (int c = 0; c < G.class_count(); ++c)
            row.push_back(Cyclo::root(e, val[G.class_rep(c)]));
        out.push_back(std::move(row));
    };
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == gens.size()) {
            attempt();
            return;
        }
        int ord = G.element_order(gens[i]);
        for (choice[i] = 0; choice[i] < ord; ++choice[i])
            self(self, i + 1);
    };
    rec(rec, 0);
    if (static_cast<int>(out.size()) != G.order())
        throw std::logic_error("abelian dual has wrong size");
    return out;
}

}  // namespace

CharTable group_from_json(const std::string& json_text)
{
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.contains("order") || !j.contains("table"))
        throw std::invalid_argument("group file needs \"order\" and \"table\"");
    int n = j["order"].get<int>();
    auto table = j["table"].get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n)
        throw std::invalid_argument("table size does not match order");

    CharTable ct;
    ct.group = FiniteGroup::from_table(std::move(table));
    ct.e = ct.group.exponent();

    if (j.contains("characters")) {
        auto rows = j["characters"].get<std::vector<std::vector<std::vector<int64_t>>>>();
        for (size_t i = 0; i < rows.size(); ++i) {
            std::vector<Cyclo> row;
            for (const auto& coeffs : rows[i]) {
                if (static_cast<int>(coeffs.size()) != ct.e)
                    throw std::invalid_argument(
                        "character value needs exactly e coefficients");
                Cyclo v(ct.e);
                for (int k = 0; k < ct.e; ++k)
                    v += Cyclo::root(ct.e, k) * mpq_class(static_cast<long>(coeffs[k]));
                row.push_back(v);
            }
            ct.chars.push_back(std::move(row));
            ct.names.push_back("chi" + std::to_string(i));
        }
    }
    else if (ct.group.abelian()) {
        ct.chars = abelian_dual(ct.group, ct.e);
        for (size_t i = 0; i < ct.chars.size(); ++i)
            ct.names.push_back("chi" + std::to_string(i));
    }
    else {
        throw std::invalid_argument(
            "non-abelian groups need a supplied character table");
    }
    ct.validate();
    return ct;
}

CharTable group_from_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return group_from_json(ss.str());
}

}  // namespace grw::rep
