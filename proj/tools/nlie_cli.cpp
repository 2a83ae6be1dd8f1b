#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlie/catalog.hpp"
#include "nlie/construct.hpp"
#include "nlie/io.hpp"
#include "nlie/operators.hpp"

using namespace nlie;
using nlohmann::json;

namespace {

json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ShapeMismatch("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return io::parse(buf.str());
}

Report relabel(const Report& src, const std::string& name) {
    Report out(name);
    for (const Failure& f : src.failures()) out.fail(f.where, f.detail);
    return out;
}

// Everything a command produces. `data` is the machine payload; commands
// whose whole point is emitting a document (catalog show, construct) set
// `document` so text mode prints just that, pipe-clean.
struct Result {
    std::vector<Report> checks;
    json data;
    bool has_data = false;
    bool document = false;
    std::string text_extra;
};

void print_checks(const std::vector<Report>& checks, std::ostream& os) {
    for (const Report& r : checks) {
        os << (r.ok() ? "ok   " : "FAIL ") << r.name() << "\n";
        for (const Failure& f : r.failures())
            os << "     " << f.where << ": " << f.detail << "\n";
        if (r.full()) os << "     (more failures truncated)\n";
    }
}

int finish(const std::string& command, const std::string& format, const Result& res) {
    bool ok = true;
    for (const Report& r : res.checks) ok = ok && r.ok();
    if (format == "json") {
        json out;
        out["command"] = command;
        out["ok"] = ok;
        json arr = json::array();
        for (const Report& r : res.checks) {
            json c;
            c["name"] = r.name();
            c["ok"] = r.ok();
            c["witness"] = r.witness();
            arr.push_back(std::move(c));
        }
        out["checks"] = std::move(arr);
        if (res.has_data) out["data"] = res.data;
        std::cout << out.dump(2) << "\n";
    } else if (res.document) {
        print_checks(res.checks, std::cerr);
        if (res.has_data) std::cout << res.data.dump(2) << "\n";
    } else {
        print_checks(res.checks, std::cout);
        if (!res.text_extra.empty()) std::cout << res.text_extra;
    }
    return ok ? 0 : 1;
}

std::string describe_bracket_table(const NLieAlgebra& g, const std::string& label) {
    std::ostringstream os;
    os << label << ":";
    if (g.constants().empty()) os << " 0";
    os << "\n";
    for (const auto& [key, value] : g.constants())
        os << "  " << tuple_to_string(key) << " -> " << format_vector(value) << "\n";
    return os.str();
}

Result run_check(const std::string& file) {
    json j = load(file);
    std::string kind = io::kind_of(j);
    Result res;
    if (kind == "n-lie") {
        NLieAlgebra g = io::algebra_from_json(j);
        res.checks = {check_filippov(g), check_leibniz_fundamental(g), check_fi3(g)};
    } else if (kind == "comm-assoc") {
        res.checks = {check_comm_assoc(io::assoc_from_json(j))};
    } else if (kind == "deformation-family") {
        DeformationFamily fam = io::family_from_json(j);
        res.checks = {relabel(check_filippov(fam.base), "base-filippov"),
                      check_deformation_conditions(fam)};
    } else if (kind == "linear-map" || kind == "rect-map" || kind == "functional") {
        if (kind == "linear-map") io::map_from_json(j);
        else if (kind == "rect-map") io::rect_map_from_json(j);
        else io::functional_from_json(j);
        res.checks = {Report("well-formed")};
    } else {
        throw ShapeMismatch("no checks defined for kind \"" + kind + "\"");
    }
    return res;
}

Result run_nijenhuis(const std::string& alg_file, const std::string& map_file) {
    NLieAlgebra g = io::algebra_from_json(load(alg_file));
    LinearMap n = io::map_from_json(load(map_file));
    Result res;
    res.checks = {is_nijenhuis(g, n), is_nijenhuis_unshuffle(g, n)};

    json tables = json::array();
    std::ostringstream extra;
    for (int level = 1; level <= g.arity() - 1; ++level) {
        BracketCandidate b = deformed_bracket(g, n, level);
        tables.push_back(io::detail::bracket_table_to_json(b));
        extra << describe_bracket_table(b, "deformed level " + std::to_string(level));
    }
    res.data["deformed"] = std::move(tables);
    res.has_data = true;
    res.text_extra = extra.str();

    if (res.checks[0].ok() && res.checks[1].ok()) {
        BracketCandidate top = deformed_bracket(g, n, g.arity() - 1);
        res.checks.push_back(relabel(check_filippov(top), "deformed-filippov"));
        res.checks.push_back(relabel(is_homomorphism(top, g, n), "homomorphism-to-base"));
    }
    return res;
}

Result run_classify(const std::string& alg_file, const std::string& map_file) {
    NLieAlgebra g = io::algebra_from_json(load(alg_file));
    LinearMap n = io::map_from_json(load(map_file));
    Classification c = classify_map(g, n);
    Result res;
    res.checks = {c.derivation, c.rota_baxter, c.nijenhuis};
    return res;
}

Result run_derivations(const std::string& alg_file) {
    NLieAlgebra g = io::algebra_from_json(load(alg_file));
    std::vector<LinearMap> basis = derivation_space(g);
    Result res;
    Report verified("derivation-basis");
    json docs = json::array();
    std::ostringstream extra;
    extra << "dimension: " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Report r = is_derivation(g, basis[i]);
        for (const Failure& f : r.failures())
            verified.fail("basis[" + std::to_string(i + 1) + "] " + f.where, f.detail);
        docs.push_back(io::map_to_json(basis[i]));
        extra << "D" << (i + 1) << " = " << io::detail::rows_to_json(basis[i]).dump()
              << "\n";
    }
    res.checks = {verified};
    res.data["dimension"] = basis.size();
    res.data["basis"] = std::move(docs);
    res.has_data = true;
    res.text_extra = extra.str();
    return res;
}

Result run_deform(const std::string& alg_file, const std::string& map_file,
                  const std::vector<std::string>& lambdas) {
    NLieAlgebra g = io::algebra_from_json(load(alg_file));
    LinearMap n = io::map_from_json(load(map_file));
    Result res;
    res.checks = {is_nijenhuis(g, n)};
    if (!res.checks[0].ok()) return res;

    DeformationFamily fam = omega_family(g, n);
    res.checks.push_back(check_deformation_conditions(fam));
    for (const std::string& text : lambdas) {
        Scalar lambda = parse_scalar(text, g.field());
        res.checks.push_back(
            relabel(check_filippov(evaluate_at(fam, lambda)), "filippov@" + text));
        res.checks.push_back(relabel(check_trivial(g, n, lambda), "trivial@" + text));
    }
    res.data = io::family_to_json(fam);
    res.has_data = true;
    std::ostringstream extra;
    for (std::size_t i = 0; i < fam.omegas.size(); ++i)
        extra << describe_bracket_table(fam.omegas[i], "omega_" + std::to_string(i + 1));
    res.text_extra = extra.str();
    return res;
}

Result run_oop(const std::string& alg_file, const std::string& rep_file,
               const std::string& map_file, bool lift) {
    NLieAlgebra g = io::algebra_from_json(load(alg_file));
    Representation rep = rep_file == "adjoint"
                             ? adjoint_rep(g)
                             : io::representation_from_json(load(rep_file), g);
    Matrix t = io::any_map_from_json(load(map_file));
    Result res;
    res.checks = {check_representation(rep), is_o_operator(rep, t)};
    if (lift) {
        LinearMap lifted = lift_o_operator(rep, t);
        res.checks.push_back(
            relabel(is_nijenhuis(semidirect_product(rep), lifted), "lift-nijenhuis"));
        res.data = io::map_to_json(lifted);
        res.has_data = true;
    }
    return res;
}

Result algebra_result(NLieAlgebra out) {
    Result res;
    res.checks = {check_filippov(out), check_leibniz_fundamental(out), check_fi3(out)};
    res.data = io::algebra_to_json(out);
    res.has_data = true;
    res.document = true;
    return res;
}

Result run_construct_extend(const std::vector<std::string>& files) {
    NLieAlgebra g = io::algebra_from_json(load(files[0]));
    Vector f = io::functional_from_json(load(files[1]));
    try {
        return algebra_result(extend_by_functional(g, f));
    } catch (const FunctionalNotVanishingOnDerived& e) {
        Result res;
        Report r("extend-precondition");
        r.fail("functional", e.what());
        res.checks = {r};
        return res;
    }
}

Result run_construct_derived(const std::string& mode,
                             const std::vector<std::string>& files) {
    CommAssocAlgebra a = io::assoc_from_json(load(files[0]));
    Result res;
    Report assoc_ok = check_comm_assoc(a);
    if (!assoc_ok.ok()) {
        res.checks = {assoc_ok};
        return res;
    }
    try {
        NLieAlgebra out = [&] {
            if (mode == "fd")
                return bracket_f_D(a, io::functional_from_json(load(files[1])),
                                   io::map_from_json(load(files[2])));
            if (mode == "d1d2")
                return bracket_D1_D2(a, io::map_from_json(load(files[1])),
                                     io::map_from_json(load(files[2])));
            return bracket_D1_D2_D3(a, io::map_from_json(load(files[1])),
                                    io::map_from_json(load(files[2])),
                                    io::map_from_json(load(files[3])));
        }();
        res = algebra_result(std::move(out));
        res.checks.insert(res.checks.begin(), assoc_ok);
        return res;
    } catch (const NotADerivation& e) {
        Report r(mode + "-precondition");
        r.fail("derivation", e.what());
        res.checks = {assoc_ok, r};
        return res;
    } catch (const FunctionalSymmetryViolated& e) {
        Report r(mode + "-precondition");
        r.fail("functional-symmetry", e.what());
        res.checks = {assoc_ok, r};
        return res;
    } catch (const DerivationsDoNotCommute& e) {
        Report r(mode + "-precondition");
        r.fail("commutation", e.what());
        res.checks = {assoc_ok, r};
        return res;
    }
}

Result run_power_identity(const std::string& alg_file, const std::string& map_file,
                          const std::string& exponents_text) {
    NLieAlgebra g = io::algebra_from_json(load(alg_file));
    LinearMap n = io::map_from_json(load(map_file));
    std::vector<long> exps;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = exponents_text.find(',', pos);
        std::string tok = exponents_text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw ShapeMismatch("bad exponent \"" + tok + "\"");
        }
        if (used != tok.size()) throw ShapeMismatch("bad exponent \"" + tok + "\"");
        exps.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Result res;
    res.checks = {power_identity(g, n, exps)};
    return res;
}

Result run_catalog_list() {
    Result res;
    res.data = json::array();
    std::ostringstream extra;
    for (const std::string& name : catalog::builtin_names()) {
        res.data.push_back(name);
        extra << name << "\n";
    }
    res.has_data = true;
    res.text_extra = extra.str();
    return res;
}

Result run_catalog_show(const std::string& name, const std::string& field_text) {
    Field f = field_from_name(field_text);
    catalog::BuiltinValue value = catalog::builtin(name, f);
    Result res;
    if (const auto* g = std::get_if<NLieAlgebra>(&value)) res.data = io::algebra_to_json(*g);
    else if (const auto* m = std::get_if<LinearMap>(&value)) res.data = io::map_to_json(*m);
    else res.data = io::assoc_to_json(std::get<CommAssocAlgebra>(value));
    res.has_data = true;
    res.document = true;
    return res;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for n-Lie algebra structure data"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    long seed = 0;
    app.add_option("--seed", seed, "seed for commands that sample");

    auto* check_cmd = app.add_subcommand("check", "verify the defining identities");
    std::string check_file;
    check_cmd->add_option("file", check_file, "JSON document")->required();

    auto* nij_cmd = app.add_subcommand("nijenhuis", "test a map against both criteria");
    std::string nij_alg, nij_map;
    nij_cmd->add_option("algebra", nij_alg)->required();
    nij_cmd->add_option("map", nij_map)->required();

    auto* cls_cmd = app.add_subcommand("classify", "derivation / Rota-Baxter / Nijenhuis");
    std::string cls_alg, cls_map;
    cls_cmd->add_option("algebra", cls_alg)->required();
    cls_cmd->add_option("map", cls_map)->required();

    auto* der_cmd = app.add_subcommand("derivations", "basis of the derivation space");
    std::string der_alg;
    der_cmd->add_option("algebra", der_alg)->required();

    auto* def_cmd = app.add_subcommand("deform", "deformation family generated by a map");
    std::string def_alg, def_map;
    std::vector<std::string> def_lambdas;
    def_cmd->add_option("algebra", def_alg)->required();
    def_cmd->add_option("map", def_map)->required();
    def_cmd->add_option("--lambda", def_lambdas, "parameter values to evaluate at");

    auto* oop_cmd = app.add_subcommand("oop", "O-operator test relative to a representation");
    std::string oop_alg, oop_rep, oop_map;
    bool oop_lift = false;
    oop_cmd->add_option("algebra", oop_alg)->required();
    oop_cmd->add_option("representation", oop_rep, "rep JSON, or \"adjoint\"")->required();
    oop_cmd->add_option("map", oop_map)->required();
    oop_cmd->add_flag("--lift", oop_lift, "also test the lift on the semidirect product");

    auto* con_cmd = app.add_subcommand("construct", "build algebras from smaller data");
    con_cmd->require_subcommand(1);
    auto* ext_cmd = con_cmd->add_subcommand("extend", "(n+1)-bracket from a functional");
    std::vector<std::string> ext_files;
    ext_cmd->add_option("files", ext_files, "algebra.json functional.json")
        ->expected(2)
        ->required();
    auto* fd_cmd = con_cmd->add_subcommand("fd", "ternary bracket from f and D");
    std::vector<std::string> fd_files;
    fd_cmd->add_option("files", fd_files, "assoc.json functional.json map.json")
        ->expected(3)
        ->required();
    auto* dd_cmd = con_cmd->add_subcommand("d1d2", "ternary bracket from two derivations");
    std::vector<std::string> dd_files;
    dd_cmd->add_option("files", dd_files, "assoc.json d1.json d2.json")
        ->expected(3)
        ->required();
    auto* ddd_cmd = con_cmd->add_subcommand("d1d2d3", "ternary bracket from three derivations");
    std::vector<std::string> ddd_files;
    ddd_cmd->add_option("files", ddd_files, "assoc.json d1.json d2.json d3.json")
        ->expected(4)
        ->required();

    auto* pow_cmd = app.add_subcommand("power-identity", "deformed-bracket power identity");
    std::string pow_alg, pow_map, pow_exps;
    pow_cmd->add_option("algebra", pow_alg)->required();
    pow_cmd->add_option("map", pow_map)->required();
    pow_cmd->add_option("--exponents", pow_exps, "comma-separated, one per slot")
        ->required();

    auto* cat_cmd = app.add_subcommand("catalog", "built-in algebras and operators");
    cat_cmd->require_subcommand(1);
    auto* list_cmd = cat_cmd->add_subcommand("list", "names of every builtin");
    auto* show_cmd = cat_cmd->add_subcommand("show", "emit a builtin as JSON");
    std::string show_name, show_field = "Q";
    show_cmd->add_option("name", show_name, "e.g. dim4_simple or T2(1,0,3,-1)")
        ->required();
    show_cmd->add_option("--field", show_field, "Q or Q(i)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    (void)seed;
    (void)list_cmd;

    try {
        Result res;
        std::string command;
        if (*check_cmd) {
            command = "check";
            res = run_check(check_file);
        } else if (*nij_cmd) {
            command = "nijenhuis";
            res = run_nijenhuis(nij_alg, nij_map);
        } else if (*cls_cmd) {
            command = "classify";
            res = run_classify(cls_alg, cls_map);
        } else if (*der_cmd) {
            command = "derivations";
            res = run_derivations(der_alg);
        } else if (*def_cmd) {
            command = "deform";
            res = run_deform(def_alg, def_map, def_lambdas);
        } else if (*oop_cmd) {
            command = "oop";
            res = run_oop(oop_alg, oop_rep, oop_map, oop_lift);
        } else if (*con_cmd) {
            command = "construct";
            if (*ext_cmd) res = run_construct_extend(ext_files);
            else if (*fd_cmd) res = run_construct_derived("fd", fd_files);
            else if (*dd_cmd) res = run_construct_derived("d1d2", dd_files);
            else res = run_construct_derived("d1d2d3", ddd_files);
        } else if (*pow_cmd) {
            command = "power-identity";
            res = run_power_identity(pow_alg, pow_map, pow_exps);
        } else {
            command = "catalog";
            res = *show_cmd ? run_catalog_show(show_name, show_field) : run_catalog_list();
        }
        return finish(command, format, res);
    } catch (const Error& e) {
        if (format == "json") {
            json out{{"command", "error"}, {"ok", false}, {"checks", json::array()},
                     {"error", e.what()}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
