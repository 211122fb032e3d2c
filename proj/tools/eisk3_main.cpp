// Command-line frontend: exact lattice/discriminant computations, the
// 24-type classification, branch-curve resolution, and degree certification.

#include "eisk3/json_io.hpp"
#include "eisk3/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace eisk3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    EISK3_REQUIRE(in.good(), "cannot open input file " + path);
    json j;
    in >> j;
    return j;
}

IntegerLattice lattice_from_arg(const std::string& input, const std::string& std_expr) {
    EISK3_REQUIRE(input.empty() != std_expr.empty(),
                  "provide exactly one of: a lattice JSON file, or --std <expression>");
    if (!std_expr.empty()) return parse_lattice_expr(std_expr);
    return lattice_from_json(read_json_file(input));
}

json lattice_report(const IntegerLattice& l) {
    json j;
    j["label"] = l.label();
    j["rank"] = l.rank();
    j["det"] = to_json(l.det());
    j["even"] = l.is_even();
    Signature s = signature(l);
    j["signature"] = json::array({s.positive, s.negative});
    SmithForm sf = smith_normal_form(l.gram());
    json divisors = json::array();
    for (std::size_t i = 0; i < l.rank(); ++i) divisors.push_back(to_json(sf.d(i, i)));
    j["smith_divisors"] = divisors;
    return j;
}

json disc_report(const IntegerLattice& l, bool enumerate) {
    DiscriminantForm d(l);
    json j;
    j["lattice"] = l.label();
    j["group_order"] = to_json(d.order());
    json orders = json::array();
    for (const auto& o : d.orders()) orders.push_back(to_json(o));
    j["elementary_divisors"] = orders;
    auto te = is_3elementary(d);
    j["three_elementary"] = te.yes;
    if (te.yes) j["length"] = te.length;
    if (!d.is_trivial() && te.yes) {
        // q-table over all group elements when small, else on generators
        if (d.order() <= 729) {
            json table = json::array();
            IVec cur(d.length(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == d.length()) {
                    json row;
                    json coeffs = json::array();
                    for (const auto& c : cur) coeffs.push_back(to_json(c));
                    row["element"] = coeffs;
                    row["q"] = to_json(d.q(cur));
                    table.push_back(row);
                    return;
                }
                for (Int c = 0; c < d.orders()[i]; ++c) {
                    cur[i] = c;
                    rec(i + 1);
                }
            };
            rec(0);
            j["q_table"] = table;
        }
        j["orthogonal_group_order"] = to_json(orthogonal_group_order(d));
        if (enumerate) {
            auto g = orthogonal_group(d);
            json elems = json::array();
            for (std::size_t i = 0; i < g.element_codes.size(); ++i) {
                auto m = g.element(i);
                json mm = json::array();
                for (const auto& row : m) {
                    json r = json::array();
                    for (auto x : row) r.push_back(static_cast<int>(x));
                    mm.push_back(r);
                }
                elems.push_back(mm);
            }
            j["elements"] = elems;
        }
    } else if (d.is_trivial()) {
        j["orthogonal_group_order"] = 1;
    }
    return j;
}

void print_text_lattice(std::ostream& os, const json& j) {
    os << "lattice " << j.value("label", std::string{}) << "\n"
       << "  rank       " << j["rank"] << "\n"
       << "  det        " << j["det"] << "\n"
       << "  even       " << (j["even"].get<bool>() ? "yes" : "no") << "\n"
       << "  signature  (" << j["signature"][0] << "," << j["signature"][1] << ")\n"
       << "  smith      " << j["smith_divisors"].dump() << "\n";
}

int classify_cmd(const std::string& format, std::ostream& os) {
    json rows = json::array();
    for (const auto& e : enumerate_types()) {
        json r;
        r["r"] = e.tuple.r;
        r["a"] = e.tuple.a;
        r["g"] = e.tuple.g;
        r["k"] = e.tuple.k;
        r["n"] = e.tuple.n;
        r["lattice"] = e.lattice_label;
        r["rationality"] = rationality_name(e.rationality);
        r["dim"] = 10 - e.tuple.r / 2;
        rows.push_back(r);
    }
    if (format == "json") {
        os << rows.dump(2) << "\n";
        return 0;
    }
    os << " r  a   g  k  n  dim  rationality        lattice\n";
    for (const auto& r : rows) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%2lld %2lld  %2lld %2lld %2lld  %3lld  %-18s %s\n",
                      r["r"].get<long long>(), r["a"].get<long long>(), r["g"].get<long long>(),
                      r["k"].get<long long>(), r["n"].get<long long>(), r["dim"].get<long long>(),
                      r["rationality"].get<std::string>().c_str(),
                      r["lattice"].get<std::string>().c_str());
        os << buf;
    }
    return 0;
}

int degree_cmd(const std::string& which, const std::string& format, std::ostream& os) {
    json rows = json::array();
    for (const auto& rec : case_table()) {
        std::string key = std::to_string(rec.r) + "," + std::to_string(rec.a);
        if (!which.empty() && which != key) continue;
        json r;
        r["r"] = rec.r;
        r["a"] = rec.a;
        r["surface"] = rec.surface;
        r["branch"] = rec.branch_description;
        r["flag"] = degree_flag_name(rec.expected);
        if (!rec.note.empty()) r["note"] = rec.note;
        if (rec.expected == DegreeFlag::one || rec.expected == DegreeFlag::point) {
            r["proj"] = to_json(projection_degree(rec).value);
            r["cover"] = to_json(cover_quotient_degree(rec));
            r["deg"] = to_json(period_map_degree(rec));
            r["verdict"] = period_map_degree(rec) == 1 ? "birational" : "NOT degree 1";
        }
        rows.push_back(r);
    }
    EISK3_REQUIRE(!rows.empty(), "degree: no case matches " + which);
    if (format == "json") {
        os << rows.dump(2) << "\n";
        return 0;
    }
    os << "(r,a)    proj    cover   deg  verdict\n";
    for (const auto& r : rows) {
        std::ostringstream line;
        line << "(" << r["r"].get<long long>() << "," << r["a"].get<long long>() << ")";
        std::string key = line.str();
        char buf[160];
        if (r.contains("deg"))
            std::snprintf(buf, sizeof buf, "%-8s %-7s %-7s %-4s %s\n", key.c_str(),
                          r["proj"].dump().c_str(), r["cover"].dump().c_str(),
                          r["deg"].dump().c_str(), r["verdict"].get<std::string>().c_str());
        else
            std::snprintf(buf, sizeof buf, "%-8s %-7s %-7s %-4s %s\n", key.c_str(), "-", "-", "-",
                          r["flag"].get<std::string>().c_str());
        os << buf;
    }
    return 0;
}

int resolve_cmd(const std::string& germ, const std::string& config_path, const std::string& format,
                std::ostream& os) {
    EISK3_REQUIRE(germ.empty() != config_path.empty(),
                  "resolve: provide exactly one of --germ <kind> or a config JSON file");
    if (!germ.empty()) {
        auto kind = branch::germ_from_name(germ);
        EISK3_REQUIRE(kind.has_value(), "resolve: unknown germ kind " + germ);
        auto res = branch::right_resolution(*kind);
        if (format == "dot") {
            os << to_dot(res.graph.exceptional_subgraph(), germ);
            return 0;
        }
        json j = to_json(res.graph.exceptional_subgraph());
        j["germ"] = germ;
        j["blowups"] = res.blowups;
        if (*kind == branch::GermKind::node || *kind == branch::GermKind::cusp ||
            *kind == branch::GermKind::tacnode || *kind == branch::GermKind::ramphoid_cusp) {
            auto k3 = branch::k3_exceptional_graph(res);
            j["dynkin"] = k3.dynkin;
            j["cyclic_action"] = k3.cyclic_action;
        }
        if (format == "json") {
            os << j.dump(2) << "\n";
            return 0;
        }
        os << "germ " << germ << ": " << j["classes"].dump() << ", " << res.blowups << " blow-ups";
        if (j.contains("dynkin")) os << ", Dynkin " << j["dynkin"].get<std::string>();
        os << "\n";
        return 0;
    }
    auto cfg = config_from_json(read_json_file(config_path));
    auto gi = branch::global_invariants(cfg);
    if (format == "dot") {
        for (std::size_t i = 0; i < gi.germ_resolutions.size(); ++i)
            os << to_dot(gi.germ_resolutions[i].graph.exceptional_subgraph(),
                         std::string(branch::germ_name(gi.germ_resolutions[i].kind)) + "_" +
                             std::to_string(i));
        return 0;
    }
    json j;
    j["surface"] = cfg.surface.name();
    j["mixed"] = gi.mixed;
    j["abelian"] = gi.abelian_flag;
    j["counts"] = {{"a2", gi.a2}, {"d4", gi.d4}, {"e6", gi.e6}, {"e8", gi.e8}, {"k0", gi.k0}};
    j["blowups"] = gi.total_blowups;
    if (!gi.mixed) {
        j["invariants"] = {{"r", gi.tuple.r}, {"a", gi.tuple.a}, {"g", gi.tuple.g},
                           {"k", gi.tuple.k}, {"n", gi.tuple.n}};
    }
    json genus;
    for (const auto& [id, g] : gi.component_genus) genus[id] = g;
    j["component_genus"] = genus;
    json germs = json::array();
    for (const auto& res : gi.germ_resolutions) {
        json gg = to_json(res.graph.exceptional_subgraph());
        gg["kind"] = branch::germ_name(res.kind);
        gg["blowups"] = res.blowups;
        germs.push_back(gg);
    }
    j["germs"] = germs;
    os << j.dump(2) << "\n";
    return 0;
}

int liftcheck_cmd(std::size_t n, int minus, const std::string& format, std::ostream& os) {
    OddUnimodularFrame frame(n, minus != 0);
    auto cert = check_reduction_surjectivity(frame);
    json j;
    j["n"] = n;
    j["minus"] = minus;
    j["classes"] = cert.classes_checked;
    j["pass"] = cert.pass;
    j["detail"] = cert.detail;
    j["reflection_group_order"] = to_json(cert.reflection_group_order);
    j["full_group_order"] = to_json(cert.full_group_order);
    if (format == "json") {
        json table = json::array();
        for (const auto& rec : cert.table) {
            json row;
            json cls = json::array();
            for (auto c : rec.cls) cls.push_back(static_cast<int>(c));
            json lift = json::array();
            for (const auto& x : rec.lift) lift.push_back(to_json(x));
            row["class"] = cls;
            row["lift"] = lift;
            row["norm"] = to_json(rec.norm);
            row["doubled"] = rec.doubled;
            table.push_back(row);
        }
        j["table"] = table;
        os << j.dump(2) << "\n";
        return cert.pass ? 0 : 1;
    }
    os << "frame n=" << n << " minus=" << minus << "\n";
    for (const auto& rec : cert.table) {
        os << "  [";
        for (std::size_t i = 0; i < rec.cls.size(); ++i)
            os << (i ? "," : "") << static_cast<int>(rec.cls[i]);
        os << "] -> (";
        for (std::size_t i = 0; i < rec.lift.size(); ++i)
            os << (i ? "," : "") << rec.lift[i];
        os << ") norm " << rec.norm << (rec.doubled ? "  [lift of 2y]" : "") << "\n";
    }
    os << "classes: " << cert.classes_checked << "; reflections generate order "
       << cert.reflection_group_order << " (full group " << cert.full_group_order << ")\n"
       << (cert.pass ? "certificate: PASS" : "certificate: FAIL") << " -- " << cert.detail << "\n";
    return cert.pass ? 0 : 1;
}

int eisenstein_cmd(const std::string& input, const std::string& catalog_name,
                   const std::string& from_herm, const std::string& format, std::ostream& os) {
    int sources = (!input.empty()) + (!catalog_name.empty()) + (!from_herm.empty());
    EISK3_REQUIRE(sources == 1,
                  "eisenstein: provide exactly one of a structure JSON file, --catalog, --from-hermitian");
    if (!from_herm.empty()) {
        auto h = hermitian_from_json(read_json_file(from_herm));
        auto lat = from_hermitian(h);
        json j;
        j["integral"] = lat.integral;
        j["even_hermitian"] = is_even_hermitian(h);
        json gram = json::array();
        for (std::size_t i = 0; i < lat.gram.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < lat.gram.cols(); ++k) row.push_back(to_json(lat.gram(i, k)));
            gram.push_back(row);
        }
        j["gram"] = gram;
        j["rho"] = to_json(lat.rho);
        os << j.dump(2) << "\n";
        return 0;
    }
    EisensteinStructure s = !catalog_name.empty()
                                ? catalog_structure(catalog_name)
                                : structure_from_json(read_json_file(input));
    json j;
    bool ok = verify_structure(s);
    j["valid"] = ok;
    if (ok) {
        auto h = to_hermitian(s);
        j["hermitian"] = to_json(h);
        j["even_hermitian"] = is_even_hermitian(h);
        Signature hs = h.signature();
        j["hermitian_signature"] = json::array({hs.positive, hs.negative});
    }
    if (format == "text") {
        os << "structure valid: " << (ok ? "yes" : "no") << "\n";
        if (ok) os << "hermitian gram: " << j["hermitian"].dump() << "\n";
    } else {
        os << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for order-3 nonsymplectic K3 lattice theory"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "accepted and ignored; all output is deterministic");

    std::string format = "text", input, std_expr, germ, which_case, catalog_name, from_herm;
    bool enumerate = false, slow = false, timing = false;
    std::size_t lift_n = 3;
    int lift_minus = 1;

    auto* lattice_cmd_p = app.add_subcommand("lattice", "invariants of an integral lattice");
    lattice_cmd_p->add_option("input", input, "lattice JSON file");
    lattice_cmd_p->add_option("--std", std_expr, "standard lattice expression, e.g. U^2+A2^5+E8");
    lattice_cmd_p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* disc_p = app.add_subcommand("disc", "discriminant form and its orthogonal group");
    disc_p->add_option("input", input, "lattice JSON file");
    disc_p->add_option("--std", std_expr, "standard lattice expression");
    disc_p->add_flag("--enumerate", enumerate, "dump the group elements");
    disc_p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* eis_p = app.add_subcommand("eisenstein", "order-3 structures and Hermitian forms");
    eis_p->add_option("input", input, "structure JSON file ({lattice, rho})");
    eis_p->add_option("--catalog", catalog_name, "standard structure name (A2, U+U, U+U(3), E6, E8)");
    eis_p->add_option("--from-hermitian", from_herm, "Hermitian Gram JSON ([[a,b]] entries)");
    eis_p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* lift_p = app.add_subcommand("liftcheck", "reflection-vector lifting certificate");
    lift_p->add_option("--n", lift_n, "number of +1 coordinates")->required();
    lift_p->add_option("--minus", lift_minus, "0 or 1: presence of the -1 coordinate")->required();
    lift_p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* glue_p = app.add_subcommand("glue", "even overlattice from glue vectors");
    glue_p->add_option("input", input, "glue spec JSON ({base, glue})")->required();
    glue_p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* classify_p = app.add_subcommand("classify", "the 24 deformation types");
    classify_p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* resolve_p = app.add_subcommand("resolve", "right resolution of branch germs/configurations");
    resolve_p->add_option("input", input, "configuration JSON file");
    resolve_p->add_option("--germ", germ, "germ kind (node, cusp, tacnode, ramphoid_cusp, ...)");
    resolve_p->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* degree_p = app.add_subcommand("degree", "period-map degree certification table");
    degree_p->add_option("--case", which_case, "restrict to one case, e.g. 8,3");
    degree_p->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* selftest_p = app.add_subcommand("selftest", "run the acceptance suite");
    selftest_p->add_flag("--slow", slow, "include the dimension-5 group enumeration");
    selftest_p->add_flag("--timing", timing, "include wall times (non-deterministic output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (lattice_cmd_p->parsed()) {
            json j = lattice_report(lattice_from_arg(input, std_expr));
            if (format == "json")
                std::cout << j.dump(2) << "\n";
            else
                print_text_lattice(std::cout, j);
            return 0;
        }
        if (disc_p->parsed()) {
            json j = disc_report(lattice_from_arg(input, std_expr), enumerate);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (eis_p->parsed())
            return eisenstein_cmd(input, catalog_name, from_herm, format, std::cout);
        if (lift_p->parsed()) return liftcheck_cmd(lift_n, lift_minus, format, std::cout);
        if (glue_p->parsed()) {
            auto spec = glue_spec_from_json(read_json_file(input));
            auto g = glue(spec);
            json j;
            j["lattice"] = to_json(g.lattice);
            j["index"] = to_json(g.index);
            j["report"] = lattice_report(g.lattice);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (classify_p->parsed()) return classify_cmd(format, std::cout);
        if (resolve_p->parsed()) return resolve_cmd(germ, input, format, std::cout);
        if (degree_p->parsed()) return degree_cmd(which_case, format, std::cout);
        if (selftest_p->parsed()) {
            auto rep = run_selftest(slow);
            std::cout << (timing ? rep.render_with_timing() : rep.render());
            return rep.all_pass ? 0 : 1;
        }
    } catch (const eisk3::domain_error& e) {
        json err;
        err["error"] = "domain";
        err["invariant"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "internal";
        err["what"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
