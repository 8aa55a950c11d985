// Command-line front end: exact computations in the mod-2 Steenrod
// algebra, canonical-ideal quotients, gamma-filtration graded
// representation rings, the character between them, and the
// verification harness.
//
// Exit codes: 0 success / all verified, 1 verification failure,
// 2 usage error, 3 resource cap exceeded.

#include "grw/charzeta.hpp"
#include "grw/gammagraded.hpp"
#include "grw/group.hpp"
#include "grw/polyf2.hpp"
#include "grw/steenrod.hpp"
#include "grw/swquotient.hpp"
#include "grw/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace grw;

namespace {

constexpr int kSchema = 1;

json steenrod_json(const steenrod::SteenrodOp& op)
{
    json terms = json::array();
    for (const auto& t : op.terms())
        terms.push_back(t.r);
    return terms;
}

json serre_cartan_json(const steenrod::SerreCartanOp& op)
{
    json terms = json::array();
    for (const auto& t : op.terms())
        terms.push_back(t.i);
    return terms;
}

json poly_json(const poly::PolyF2& p)
{
    json terms = json::array();
    for (const auto& m : p.terms())
        terms.push_back(m.e);
    return terms;
}

int cmd_theta(int n, const std::string& basis, bool as_json, int64_t cap)
{
    steenrod::Caps caps{cap};
    steenrod::SteenrodOp th = steenrod::theta(n, caps);
    if (as_json) {
        json out{{"schema", kSchema}, {"n", n}, {"basis", basis}};
        if (basis == "milnor")
            out["terms"] = steenrod_json(th);
        else
            out["terms"] = serre_cartan_json(to_serre_cartan(th, caps));
        std::cout << out.dump(2) << "\n";
    }
    else {
        if (basis == "milnor")
            std::cout << th.str() << "\n";
        else
            std::cout << to_serre_cartan(th, caps).str() << "\n";
    }
    return 0;
}

int cmd_key_identity(int n, bool as_json)
{
    poly::PolyF2 prod = poly::PolyF2::one(n);
    for (int i = 0; i < n; ++i)
        prod = prod * poly::PolyF2::var(n, i);
    poly::PolyF2 lhs = steenrod_action(steenrod::theta(n), prod);
    poly::PolyF2 mid = poly::theta_direct(n);
    poly::PolyF2 rhs = poly::mk_product(n);
    bool ok = lhs == mid && mid == rhs;
    if (as_json) {
        json out{{"schema", kSchema},
                 {"n", n},
                 {"theta_action", poly_json(lhs)},
                 {"tuple_sum", poly_json(mid)},
                 {"odd_mk_product", poly_json(rhs)},
                 {"equal", ok}};
        std::cout << out.dump(2) << "\n";
    }
    else {
        std::cout << "theta_" << n << "(t1..t" << n << ") = " << lhs.str() << "\n";
        std::cout << "tuple sum          = " << mid.str() << "\n";
        std::cout << "odd m_k product    = " << rhs.str() << "\n";
        std::cout << (ok ? "equal" : "NOT equal") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_sw_virtual(const std::string& file, bool as_json)
{
    json in;
    if (file == "-") {
        in = json::parse(std::cin);
    }
    else {
        std::ifstream f(file);
        if (!f)
            throw CLI::ValidationError("input", "cannot open " + file);
        in = json::parse(f);
    }
    int nvars = in.at("vars").get<int>();
    int64_t D = in.value("truncate", 8);
    auto lines = [&](const char* key) {
        std::vector<poly::PolyF2> out;
        for (const auto& l : in.value(key, json::array())) {
            std::vector<int> vars;
            for (int v : l.get<std::vector<int>>())
                vars.push_back(v - 1);  // 1-based in the file
            out.push_back(poly::linear_form(nvars, vars));
        }
        return out;
    };
    auto s = poly::sw_virtual(lines("plus"), lines("minus"), D);
    if (as_json) {
        json w = json::array();
        for (int64_t i = 0; i <= D; ++i)
            w.push_back(poly_json(s.w(i)));
        std::cout << json{{"schema", kSchema}, {"truncate", D}, {"w", w}}.dump(2) << "\n";
    }
    else {
        for (int64_t i = 0; i <= D; ++i)
            std::cout << "w_" << i << " = " << s.w(i).str() << "\n";
    }
    return 0;
}

int cmd_ideal(const std::string& which, int rank, int max_degree, bool as_json)
{
    json out{{"schema", kSchema}, {"model", which}, {"max_degree", max_degree}};
    json per_degree = json::array();
    if (which == "elem-abelian") {
        std::vector<poly::PolyF2> gens;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j)
                    continue;
                auto ti = poly::PolyF2::var(rank, i), tj = poly::PolyF2::var(rank, j);
                gens.push_back(ti * ti * tj + ti * tj * tj);
            }
        bool all_ok = true;
        for (int d = 1; d <= max_degree; ++d) {
            auto ker = swq::theta_kernel_degree(rank, d);
            auto span = swq::ideal_span_degree(gens, d, rank);
            auto sub = swq::subset_reduction_kernel(rank, d);
            bool ok = span.same_row_space(ker) && ker.same_row_space(sub);
            all_ok &= ok;
            int hdim = static_cast<int>(poly::monomials_of_degree(rank, d).size());
            per_degree.push_back(json{{"degree", d},
                                      {"dim_h", hdim},
                                      {"dim_ideal", ker.rank()},
                                      {"dim_quotient", hdim - ker.rank()},
                                      {"three_descriptions_agree", ok}});
            if (!as_json)
                std::cout << "degree " << d << ": dim H = " << hdim
                          << ", dim ideal = " << ker.rank()
                          << ", quotient = " << hdim - ker.rank()
                          << (ok ? "" : "  [MISMATCH]") << "\n";
        }
        out["verified"] = all_ok;
        if (as_json) {
            out["degrees"] = per_degree;
            std::cout << out.dump(2) << "\n";
        }
        else {
            std::cout << (all_ok ? "all three descriptions agree" : "MISMATCH") << "\n";
        }
        return all_ok ? 0 : 1;
    }
    if (which == "c4") {
        swq::C4Model m(max_degree);
        bool verdict = m.ideal_is_xy_ideal();
        for (int d = 0; d <= max_degree; ++d) {
            per_degree.push_back(json{{"degree", d},
                                      {"dim_h", m.dim(d)},
                                      {"in_ideal", d >= 1 && m.basis_in_ideal(d)},
                                      {"dim_quotient", m.quotient_dim(d)}});
            if (!as_json)
                std::cout << "degree " << d << ": quotient dim " << m.quotient_dim(d)
                          << "\n";
        }
        out["ideal_equals_xy_ideal"] = verdict;
        if (as_json) {
            out["degrees"] = per_degree;
            std::cout << out.dump(2) << "\n";
        }
        else {
            std::cout << "ideal generated by x y: " << (verdict ? "yes" : "NO") << "\n";
        }
        return verdict ? 0 : 1;
    }
    if (which == "d4") {
        swq::D4Model m(max_degree);
        bool verdict = m.ideal_matches_generators();
        for (int d = 0; d <= max_degree; ++d) {
            per_degree.push_back(json{{"degree", d},
                                      {"dim_h", m.dim(d)},
                                      {"dim_ideal", d >= 1 ? m.ideal(d).rank() : 0},
                                      {"dim_quotient", m.quotient_dim(d)}});
            if (!as_json)
                std::cout << "degree " << d << ": dim H = " << m.dim(d) << ", ideal "
                          << (d >= 1 ? m.ideal(d).rank() : 0) << ", quotient "
                          << m.quotient_dim(d) << "\n";
        }
        out["ideal_equals_generated"] = verdict;
        if (as_json) {
            out["degrees"] = per_degree;
            std::cout << out.dump(2) << "\n";
        }
        else {
            std::cout << "ideal generated by W1 W and W2 W: " << (verdict ? "yes" : "NO")
                      << "\n";
        }
        return verdict ? 0 : 1;
    }
    throw CLI::ValidationError("ideal", "unknown model " + which);
}

int cmd_bo_relations(bool as_json)
{
    struct Case {
        swq::BOMonomial a, b;
        std::string name;
        bool expect_equal;
    };
    std::vector<Case> cases = {
        {{{{5}}}, {{{1, 4}}}, "w5(p1) = w1(p1) w4(p1)", true},
        {{{{1}, {2, 2}}}, {{{1, 1, 1}, {2}}}, "w1(E) w2(F)^2 = w1(E)^3 w2(F)", true},
        {{{{2}}}, {{{1, 1}}}, "w2(p1) vs w1(p1)^2", false},
    };
    json rows = json::array();
    bool all_ok = true;
    for (const auto& c : cases) {
        bool eq = swq::bo_equal_mod_ideal(c.a, c.b);
        bool ok = eq == c.expect_equal;
        all_ok &= ok;
        auto na = swq::bo_normal_form(c.a), nb = swq::bo_normal_form(c.b);
        json fa = json::array(), fb = json::array();
        for (auto& [orv, deg] : na.factors)
            fa.push_back(json{{"or", orv}, {"degree", deg}});
        for (auto& [orv, deg] : nb.factors)
            fb.push_back(json{{"or", orv}, {"degree", deg}});
        rows.push_back(json{{"relation", c.name},
                            {"left_normal_form", fa},
                            {"right_normal_form", fb},
                            {"equal_mod_ideal", eq},
                            {"verdict", ok ? "verified" : "failed"}});
        if (!as_json)
            std::cout << c.name << ": " << (eq ? "equal" : "different")
                      << (ok ? "" : "  [UNEXPECTED]") << "\n";
    }
    bool law = true;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            law &= swq::verify_or_product_law(i, j, 16);
    all_ok &= law;
    if (!as_json)
        std::cout << "t_{i,i} t_{j,j} = t_{i OR j, i+j} over 16 variables (i,j <= 4): "
                  << (law ? "verified" : "FAILED") << "\n";
    if (as_json) {
        std::cout << json{{"schema", kSchema},
                          {"relations", rows},
                          {"or_product_law", law}}
                         .dump(2)
                  << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_group_validate(const std::string& path, bool as_json)
{
    rep::CharTable ct = rep::group_from_json_file(path);
    if (as_json) {
        std::cout << json{{"schema", kSchema},
                          {"order", ct.group.order()},
                          {"abelian", ct.group.abelian()},
                          {"exponent", ct.group.exponent()},
                          {"classes", ct.group.class_count()},
                          {"irreducibles", ct.count()},
                          {"valid", true}}
                         .dump(2)
                  << "\n";
    }
    else {
        std::cout << "order " << ct.group.order() << ", "
                  << (ct.group.abelian() ? "abelian" : "non-abelian") << ", exponent "
                  << ct.group.exponent() << ", " << ct.group.class_count() << " classes, "
                  << ct.count() << " irreducibles: valid\n";
    }
    return 0;
}

std::shared_ptr<rep::RepRing> make_ring(const std::string& group, const std::string& field)
{
    rep::CharTable ct;
    if (group.size() > 5 && group.substr(group.size() - 5) == ".json")
        ct = rep::group_from_json_file(group);
    else
        ct = rep::catalog(group);
    return std::make_shared<rep::RepRing>(std::move(ct), rep::parse_field(field));
}

// named presentation relations for the catalog groups, checked on
// mod-2 classes
json relation_verdicts(gamma::GammaFiltration& gf)
{
    const auto& ring = gf.ring();
    auto idx = [&](const std::string& n) {
        for (int i = 0; i < ring.rank(); ++i)
            if (ring.name(i) == n)
                return i;
        return -1;
    };
    auto zero_mod2 = [&](const gamma::GrClass& c) {
        auto v = gf.mod2_coords(c.degree, c);
        for (auto b : v)
            if (b)
                return false;
        return true;
    };
    json out = json::array();
    auto push = [&](const std::string& rel, bool ok) {
        out.push_back(json{{"relation", rel}, {"verified", ok}});
    };

    int ieps = idx("eps"), ir1 = idx("r1"), ir2 = idx("r2"), iD = idx("Delta");
    if (iD >= 0 && ir1 >= 0 && ir2 >= 0) {  // dihedral
        auto c1r1 = gf.chern(1, ir1), c1r2 = gf.chern(1, ir2), c2D = gf.chern(2, iD);
        push("c1(r1) c1(r2) = 0", zero_mod2(gf.gr_product(c1r1, c1r2)));
        push("c1(r1) c2(Delta) = c1(r2) c2(Delta)",
             gf.mod2_coords(3, gf.gr_product(c1r1, c2D)) ==
                 gf.mod2_coords(3, gf.gr_product(c1r2, c2D)));
        return out;
    }
    if (ieps >= 0 && ring.group().abelian() && ring.field() == rep::Field::Real) {
        int N = ring.group().order();
        bool cyclic = false;
        for (int g = 0; g < N && !cyclic; ++g)
            cyclic = ring.group().element_order(g) == N;
        if (cyclic && N % 2 == 0) {
            auto c1 = gf.chern(1, ieps);
            bool sq_zero = zero_mod2(gf.gr_product(c1, c1));
            if ((N / 2) % 2 == 0) {
                push("c1(eps)^2 = 0", sq_zero);
            }
            else if (ir1 >= 0) {
                push("c2(r1) = c1(eps)^2",
                     gf.mod2_coords(2, gf.chern(2, ir1)) ==
                         gf.mod2_coords(2, gf.gr_product(c1, c1)));
            }
            return out;
        }
    }
    if (ring.group().abelian() && ring.group().exponent() <= 2) {
        bool ok = true;
        const auto& lines = ring.line_indices();
        for (int a : lines)
            for (int b : lines) {
                if (a == ring.trivial_index() || b == ring.trivial_index() || a == b)
                    continue;
                auto ca = gf.chern(1, a), cb = gf.chern(1, b);
                ok &= gf.mod2_coords(3, gf.gr_product(gf.gr_product(ca, ca), cb)) ==
                      gf.mod2_coords(3, gf.gr_product(ca, gf.gr_product(cb, cb)));
            }
        push("c1(e_i)^2 c1(e_j) = c1(e_i) c1(e_j)^2", ok);
    }
    return out;
}

int cmd_gr_rep(const std::string& group, const std::string& field, int max_degree, bool mod2,
               bool dec, bool as_json)
{
    auto ring = make_ring(group, field);
    gamma::GammaFiltration gf(ring);
    json degrees = json::array();
    for (int n = 1; n <= max_degree; ++n) {
        json row{{"degree", n}};
        json factors = json::array();
        for (const auto& f : gf.gr_piece(n).factors())
            factors.push_back(f.get_str());
        row["invariant_factors"] = factors;
        if (mod2 || dec)
            row["mod2_dim"] = gf.gr_mod2(n).dim;
        if (mod2) {
            json basis = json::array();
            for (const auto& m : gf.chern_basis(n).monos)
                basis.push_back(m.str(*ring));
            row["mod2_basis"] = basis;
        }
        if (dec)
            row["dec_dim"] = gf.dec_dim(n);
        degrees.push_back(row);
        if (!as_json) {
            std::cout << "gr^" << n << ":";
            std::cout << " factors (";
            bool first = true;
            for (const auto& f : gf.gr_piece(n).factors()) {
                if (!first)
                    std::cout << ", ";
                first = false;
                std::cout << f.get_str();
            }
            std::cout << ")";
            if (mod2 || dec)
                std::cout << "  mod-2 dim " << gf.gr_mod2(n).dim;
            if (dec)
                std::cout << "  dec dim " << gf.dec_dim(n);
            if (mod2 && gf.gr_mod2(n).dim > 0) {
                std::cout << "  basis {";
                bool f1 = true;
                for (const auto& m : gf.chern_basis(n).monos) {
                    if (!f1)
                        std::cout << ", ";
                    f1 = false;
                    std::cout << m.str(*ring);
                }
                std::cout << "}";
            }
            std::cout << "\n";
        }
    }
    json relations = relation_verdicts(gf);
    if (as_json) {
        std::cout << json{{"schema", kSchema},
                          {"group", group},
                          {"field", field},
                          {"degrees", degrees},
                          {"relations", relations}}
                         .dump(2)
                  << "\n";
    }
    else {
        for (const auto& rel : relations)
            std::cout << rel["relation"].get<std::string>() << ": "
                      << (rel["verified"].get<bool>() ? "verified" : "FAILED") << "\n";
    }
    return 0;
}

int cmd_omega(const std::string& group, int max_degree, bool as_json)
{
    auto ring = make_ring(group, "R");
    gamma::GammaFiltration gf(ring);
    auto model = zeta::model_for(ring, max_degree);
    auto rep = zeta::omega(gf, *model, max_degree);
    json degrees = json::array();
    for (const auto& od : rep.degrees) {
        degrees.push_back(json{{"degree", od.degree},
                               {"source_dim", od.source_dim},
                               {"target_dim", od.target_dim},
                               {"image_rank", od.image_rank},
                               {"kernel_dim", od.kernel_dim},
                               {"well_defined", od.well_defined}});
        if (!as_json)
            std::cout << "degree " << od.degree << ": source " << od.source_dim
                      << " -> target " << od.target_dim << ", image " << od.image_rank
                      << ", kernel " << od.kernel_dim << "\n";
    }
    if (as_json) {
        std::cout << json{{"schema", kSchema},
                          {"group", group},
                          {"target", model->describe()},
                          {"well_defined", rep.well_defined},
                          {"injective", rep.injective},
                          {"surjective", rep.surjective},
                          {"degrees", degrees}}
                         .dump(2)
                  << "\n";
    }
    else {
        std::cout << "target " << model->describe() << "; well defined: "
                  << (rep.well_defined ? "yes" : "NO")
                  << ", isomorphism: " << ((rep.injective && rep.surjective) ? "yes" : "no")
                  << "\n";
    }
    return rep.well_defined ? 0 : 1;
}

int cmd_zeta(const std::string& case_name, int max_degree, bool as_json)
{
    auto c = zeta::find_case(case_name);
    if (!c)
        throw CLI::ValidationError("zeta", "unknown case " + case_name +
                                               " (try: finite-field, real-closed, dihedral, "
                                               "c-field-1, c-field-2, c-field-3)");
    auto rep = zeta::zeta_case(*c, max_degree);
    auto sq = zeta::square_diagram_check(*c, std::min(max_degree, 6));
    if (as_json) {
        std::cout << json{{"schema", kSchema},
                          {"case", c->name},
                          {"group", c->group_name},
                          {"reference", c->reference_dims},
                          {"provenance", c->provenance},
                          {"dec_dims", rep.dec_dims},
                          {"dims_match", rep.dims_match},
                          {"iso_degrees_1_2", rep.iso_degree1 && rep.iso_degree2},
                          {"square_commutes", sq.commutes}}
                         .dump(2)
                  << "\n";
    }
    else {
        std::cout << "case " << c->name << " (group " << c->group_name << ")\n";
        std::cout << "dec dims:";
        for (int d : rep.dec_dims)
            std::cout << " " << d;
        std::cout << "\nreference:";
        for (size_t i = 0; i < rep.dec_dims.size(); ++i)
            std::cout << " "
                      << (i < c->reference_dims.size() ? c->reference_dims[i] : 0);
        std::cout << "\nmatch: " << (rep.dims_match ? "yes" : "NO")
                  << ", square commutes: " << (sq.commutes ? "yes" : "NO") << "\n";
    }
    return rep.dims_match && sq.commutes ? 0 : 1;
}

int cmd_verify(const std::string& id, bool list, bool as_json, const verify::Options& opt)
{
    if (list) {
        for (const auto& c : verify::registry())
            std::cout << c.id << (c.extended_only ? " (extended)" : "") << ": "
                      << c.description << "\n";
        return 0;
    }
    std::vector<verify::Result> results;
    if (id == "all") {
        results = verify::run_all(opt);
    }
    else {
        const verify::Claim* c = verify::find_claim(id);
        if (!c)
            throw CLI::ValidationError("verify", "unknown claim id " + id);
        results.push_back(verify::run_claim(*c, opt));
    }
    bool any_failed = false;
    if (as_json) {
        json rows = json::array();
        for (const auto& r : results) {
            rows.push_back(json{{"id", r.id},
                                {"description", r.description},
                                {"status", verify::status_name(r.status)},
                                {"seconds", r.seconds},
                                {"details", r.details}});
            any_failed |= r.status == verify::Status::Failed;
        }
        std::cout << json{{"schema", kSchema}, {"results", rows}}.dump(2) << "\n";
    }
    else {
        for (const auto& r : results) {
            std::cout << "[" << verify::status_name(r.status) << "] " << r.id << " ("
                      << std::fixed << std::setprecision(2) << r.seconds << "s)";
            if (!r.details.empty())
                std::cout << " -- " << r.details;
            std::cout << "\n";
            any_failed |= r.status == verify::Status::Failed;
        }
    }
    return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations around distinguished Steenrod operations, "
                 "canonical cohomology quotients, and gamma-filtration graded "
                 "representation rings"};
    app.require_subcommand(1);

    int64_t cap_degree = 120;
    app.add_option("--cap-degree", cap_degree, "internal degree cap for Steenrod arithmetic");

    // theta
    auto* theta_cmd = app.add_subcommand("theta", "the distinguished operation theta_n");
    int theta_n = 0;
    std::string theta_basis = "milnor";
    bool theta_json = false;
    theta_cmd->add_option("n", theta_n, "index n >= 1")->required();
    theta_cmd->add_option("--basis", theta_basis, "milnor | serre-cartan")
        ->check(CLI::IsMember({"milnor", "serre-cartan"}));
    theta_cmd->add_flag("--json", theta_json, "JSON output");

    // key-identity
    auto* key_cmd = app.add_subcommand("key-identity",
                                       "both sides of the degree-raising identity");
    int key_n = 3;
    bool key_json = false;
    key_cmd->add_option("n", key_n, "number of variables")->required();
    key_cmd->add_flag("--json", key_json, "JSON output");

    // sw-virtual
    auto* sw_cmd = app.add_subcommand("sw-virtual",
                                      "total Stiefel-Whitney series of a virtual sum of "
                                      "line classes (JSON input)");
    std::string sw_file = "-";
    bool sw_json = false;
    sw_cmd->add_option("input", sw_file, "JSON file ('-' for stdin)");
    sw_cmd->add_flag("--json", sw_json, "JSON output");

    // ideal
    auto* ideal_cmd = app.add_subcommand("ideal", "canonical ideal of a cohomology model");
    std::string ideal_model;
    int ideal_rank = 2, ideal_deg = 8;
    bool ideal_json = false;
    ideal_cmd->add_option("model", ideal_model, "elem-abelian | c4 | d4")->required();
    ideal_cmd->add_option("--rank", ideal_rank, "variable count for elem-abelian");
    ideal_cmd->add_option("--max-degree", ideal_deg, "top degree");
    ideal_cmd->add_flag("--json", ideal_json, "JSON output");

    // bo-relations
    auto* bo_cmd = app.add_subcommand("bo-relations",
                                      "universal relations and their normal forms");
    bool bo_json = false;
    bo_cmd->add_flag("--json", bo_json, "JSON output");

    // group
    auto* group_cmd = app.add_subcommand("group", "group file utilities");
    auto* group_validate = group_cmd->add_subcommand("validate", "validate a group file");
    std::string group_file;
    bool group_json = false;
    group_validate->add_option("file", group_file, "JSON group file")->required();
    group_validate->add_flag("--json", group_json, "JSON output");

    // gr-rep
    auto* gr_cmd = app.add_subcommand("gr-rep", "graded representation ring");
    std::string gr_group, gr_field = "R";
    int gr_deg = 6;
    bool gr_mod2 = false, gr_dec = false, gr_json = false;
    gr_cmd->add_option("group", gr_group, "catalog name or .json file")->required();
    gr_cmd->add_option("--field", gr_field, "R | C");
    gr_cmd->add_option("--max-degree", gr_deg, "top degree");
    gr_cmd->add_flag("--mod2", gr_mod2, "report mod-2 structure");
    gr_cmd->add_flag("--dec", gr_dec, "report decomposable dimensions");
    gr_cmd->add_flag("--json", gr_json, "JSON output");

    // omega
    auto* omega_cmd = app.add_subcommand("omega", "the character into the cohomology "
                                                  "quotient");
    std::string om_group;
    int om_deg = 6;
    bool om_json = false;
    omega_cmd->add_option("group", om_group, "catalog name")->required();
    omega_cmd->add_option("--max-degree", om_deg, "top degree");
    omega_cmd->add_flag("--json", om_json, "JSON output");

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "Milnor K comparison over the W-group "
                                                "catalog");
    std::string zeta_name;
    int zeta_deg = 6;
    bool zeta_json = false;
    zeta_cmd->add_option("case", zeta_name, "finite-field | real-closed | dihedral | "
                                            "c-field-1 | c-field-2 | c-field-3")
        ->required();
    zeta_cmd->add_option("--max-degree", zeta_deg, "top degree");
    zeta_cmd->add_flag("--json", zeta_json, "JSON output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification claims");
    std::string verify_id = "all";
    bool verify_list = false, verify_json = false, verify_ext = false;
    int verify_deg = 6;
    verify_cmd->add_option("id", verify_id, "claim id or 'all'");
    verify_cmd->add_flag("--list", verify_list, "list claim ids");
    verify_cmd->add_option("--max-degree", verify_deg, "bound for open-ended claims");
    verify_cmd->add_flag("--extended", verify_ext, "include the extended claims");
    verify_cmd->add_flag("--json", verify_json, "JSON output");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (theta_cmd->parsed()) {
            if (theta_n < 1)
                throw CLI::ValidationError("theta", "n must be >= 1");
            return cmd_theta(theta_n, theta_basis, theta_json, cap_degree);
        }
        if (key_cmd->parsed()) {
            if (key_n < 1)
                throw CLI::ValidationError("key-identity", "n must be >= 1");
            return cmd_key_identity(key_n, key_json);
        }
        if (sw_cmd->parsed())
            return cmd_sw_virtual(sw_file, sw_json);
        if (ideal_cmd->parsed())
            return cmd_ideal(ideal_model, ideal_rank, ideal_deg, ideal_json);
        if (bo_cmd->parsed())
            return cmd_bo_relations(bo_json);
        if (group_validate->parsed())
            return cmd_group_validate(group_file, group_json);
        if (gr_cmd->parsed())
            return cmd_gr_rep(gr_group, gr_field, gr_deg, gr_mod2, gr_dec, gr_json);
        if (omega_cmd->parsed())
            return cmd_omega(om_group, om_deg, om_json);
        if (zeta_cmd->parsed())
            return cmd_zeta(zeta_name, zeta_deg, zeta_json);
        if (verify_cmd->parsed()) {
            verify::Options opt;
            opt.max_degree = verify_deg;
            opt.extended = verify_ext;
            opt.cap_degree = cap_degree;
            return cmd_verify(verify_id, verify_list, verify_json, opt);
        }
    }
    catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const steenrod::cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
