// Command-line front end: deterministic JSON in, deterministic JSON out.
// Exit codes: 0 success, 1 validation failure (with a structured
// diagnostic), 2 size-bound infeasibility.

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semicoh/brauer.hpp"
#include "semicoh/json_io.hpp"

namespace {

using nlohmann::json;
using namespace semicoh;

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Inputs {
    json record = json::object();

    json load(const std::string& role, const std::string& path) {
        std::string text = read_all(path);
        record[role] = {{"path", path}, {"sha256", sha256_hex(text)}};
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw invalid_input(path + ": " + e.what());
        }
    }

    void note_spec(const std::string& role, const std::string& spec) {
        record[role] = {{"spec", spec}, {"sha256", sha256_hex(spec)}};
    }
};

void emit(const json& doc, const std::string& output) {
    std::string text = doc.dump(2) + "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw invalid_input("cannot open output file: " + output);
        f << text;
    }
}

json factors_json(const std::vector<Int>& moduli) {
    // canonical component moduli: nonzero entries are the invariant factors,
    // zeros are free generators
    json factors = json::array();
    std::size_t free_rank = 0;
    for (const auto& m : moduli) {
        if (m == 0)
            ++free_rank;
        else
            factors.push_back(detail::int_to_json(m));
    }
    return json{{"invariant_factors", std::move(factors)}, {"free_rank", free_rank}};
}

std::pair<Int, std::size_t> parse_field_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size())
        throw invalid_input("--field expects 'p:n'");
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (i != colon && !std::isdigit(static_cast<unsigned char>(spec[i])))
            throw invalid_input("--field expects 'p:n'");
    Int p(spec.substr(0, colon));
    std::size_t n = std::stoul(spec.substr(colon + 1));
    return {p, n};
}

std::size_t parse_cyclic_spec(const std::string& spec) {
    const std::string prefix = "cyclic:";
    if (spec.rfind(prefix, 0) != 0 || spec.size() == prefix.size())
        throw invalid_input("--group expects 'cyclic:n'");
    std::size_t n = 0;
    for (std::size_t k = prefix.size(); k < spec.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(spec[k])))
            throw invalid_input("--group expects 'cyclic:n'");
        n = n * 10 + static_cast<std::size_t>(spec[k] - '0');
        if (n > 1000) throw bound_exceeded("group order too large");
    }
    if (n == 0) throw invalid_input("group order must be positive");
    return n;
}

int run_validate(const std::string& sg_path, const std::string& module_path,
                 const std::string& root_path, const std::string& mod_path,
                 const std::string& output) {
    Inputs in;
    json checks = json::object();
    bool all_ok = true;

    FiniteSemigroup s;
    bool have_sg = !sg_path.empty();
    if (have_sg) {
        s = semigroup_from_json(in.load("semigroup", sg_path));
        auto v = validate_semigroup(s);
        json c = {{"ok", v.ok}};
        if (!v.ok) {
            c["error"] = v.message;
            if (!v.witness[0].empty())
                c["witness"] = json::array({v.witness[0], v.witness[1], v.witness[2]});
            all_ok = false;
        }
        checks["semigroup"] = std::move(c);
    }
    if (!module_path.empty()) {
        auto m = module_from_json(in.load("module", module_path));
        json c;
        if (!have_sg) {
            c = {{"ok", false}, {"error", "module validation needs --semigroup"}};
            all_ok = false;
        } else if (!checks["semigroup"]["ok"].get<bool>()) {
            c = {{"ok", false}, {"error", "carrier semigroup failed validation"}};
            all_ok = false;
        } else {
            auto v = validate_module(m, s);
            c = {{"ok", v.ok}};
            if (!v.ok) {
                c["error"] = v.message;
                if (!v.witness.first.empty())
                    c["witness"] = json::array({v.witness.first, v.witness.second});
                all_ok = false;
            }
        }
        checks["module"] = std::move(c);
    }
    if (!root_path.empty()) {
        // make_root rejects inconsistent product data during parsing
        root_from_json(in.load("root", root_path));
        checks["root"] = {{"ok", true}};
    }
    if (!mod_path.empty()) {
        modification_from_json(in.load("modification", mod_path));
        checks["modification"] = {{"ok", true}};
    }
    if (checks.empty()) throw invalid_input("validate needs at least one input document");

    json out = {{"command", "validate"}, {"ok", all_ok}, {"checks", std::move(checks)},
                {"inputs", in.record}};
    emit(out, output);
    return all_ok ? 0 : 1;
}

int run_cohomology(const std::string& kind, const std::string& sg_path,
                   const std::string& root_path, const std::string& module_path,
                   std::size_t degree, const std::string& output) {
    Inputs in;
    CoefficientModule m = module_from_json(in.load("module", module_path));
    CohomologyResult r;
    if (kind == "em" || kind == "zero") {
        if (sg_path.empty()) throw invalid_input("--kind " + kind + " needs --semigroup");
        FiniteSemigroup s = checked_semigroup(semigroup_from_json(in.load("semigroup", sg_path)));
        r = kind == "em" ? em_cohomology(s, m, degree) : zero_cohomology(s, m, degree);
    } else if (kind == "partial") {
        if (root_path.empty()) throw invalid_input("--kind partial needs --root");
        Root w = root_from_json(in.load("root", root_path));
        r = partial_cohomology(w, m, degree);
    } else {
        throw invalid_input("--kind must be one of em, zero, partial");
    }
    json out = cohomology_result_to_json(r);
    out["command"] = "cohomology";
    out["ok"] = true;
    out["kind"] = kind;
    out["inputs"] = in.record;
    emit(out, output);
    return 0;
}

int run_theta(const std::string& sg_path, const std::string& root_path,
              const std::string& module_path, std::size_t degree, const std::string& output) {
    Inputs in;
    FiniteSemigroup s = checked_semigroup(semigroup_from_json(in.load("semigroup", sg_path)));
    Root w = root_from_json(in.load("root", root_path));
    CoefficientModule m = module_from_json(in.load("module", module_path));
    auto th = theta_map(s, w, m, degree);
    json out = {{"command", "theta"},
                {"ok", true},
                {"degree", th.degree},
                {"injective", th.induced.injective},
                {"surjective", th.induced.surjective},
                {"isomorphism", th.induced.injective && th.induced.surjective},
                {"inputs", in.record}};
    emit(out, output);
    return 0;
}

int run_modifications(const std::string& group_spec, bool up_to_aut,
                      const std::string& emit_dir, std::size_t threads,
                      const std::string& output) {
    Inputs in;
    in.note_spec("group", group_spec);
    std::size_t n = parse_cyclic_spec(group_spec);
    auto list = enumerate_modifications(cyclic_group(n), up_to_aut, 9, threads);
    json out = {{"command", "modifications"},
                {"ok", true},
                {"group", group_spec},
                {"up_to_aut", up_to_aut},
                {"raw_total", list.raw_total},
                {"total", list.total},
                {"proper", list.proper},
                {"inputs", in.record}};
    // `total` counts the full (unmodified) table as a modification of
    // itself; `proper` excludes it. Both conventions are reported.
    out["full_table_included_in_total"] = true;
    if (up_to_aut) out["orbit_sizes"] = list.orbit_sizes;
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        std::size_t width = std::to_string(list.mods.size()).size();
        for (std::size_t i = 0; i < list.mods.size(); ++i) {
            std::string name = std::to_string(i);
            name = "table_" + std::string(width > name.size() ? width - name.size() : 0, '0') +
                   name + ".json";
            std::ofstream f(std::filesystem::path(emit_dir) / name, std::ios::binary);
            if (!f) throw invalid_input("cannot write into --emit-tables directory");
            f << modification_to_json(list.mods[i]).dump(2) << "\n";
        }
        out["emitted"] = list.mods.size();
        out["emit_dir"] = emit_dir;
    }
    emit(out, output);
    return 0;
}

int run_brauer(const std::string& field_spec, const std::string& output) {
    Inputs in;
    in.note_spec("field", field_spec);
    auto [p, n] = parse_field_spec(field_spec);
    auto m = brauer_monoid(galois_module(p, n));
    json comps = json::array();
    for (std::size_t i = 0; i < m.groups.size(); ++i) {
        json c = factors_json(m.groups.moduli[i]);
        c["name"] = m.groups.index_names[i];
        comps.push_back(std::move(c));
    }
    Int coeff_order = 1;
    for (std::size_t k = 0; k < m.data.n; ++k) coeff_order *= m.data.p;
    coeff_order -= 1;
    json out = {{"command", "brauer"},
                {"ok", true},
                {"field", field_spec},
                {"galois_order", m.data.galois.size()},
                {"coefficient_order", detail::int_to_json(coeff_order)},
                {"components", std::move(comps)},
                {"full_index", m.full_index},
                {"null_index", m.null_index},
                {"inputs", in.record}};
    emit(out, output);
    return 0;
}

int run_schur(const std::string& sg_path, const std::string& field_spec,
              const std::string& output) {
    Inputs in;
    in.note_spec("field", field_spec);
    for (char c : field_spec)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw invalid_input("--field expects a prime power q");
    if (field_spec.empty()) throw invalid_input("--field expects a prime power q");
    Int q(field_spec);
    FiniteSemigroup s = checked_semigroup(semigroup_from_json(in.load("semigroup", sg_path)));
    auto sch = schur_semilattice(s, q);
    json ideals = json::array();
    for (const auto& ideal : sch.ideals) {
        json names = json::array();
        for (auto i : ideal) names.push_back(s.elements[i]);
        ideals.push_back(std::move(names));
    }
    json comps = json::array();
    for (std::size_t i = 0; i < sch.groups.size(); ++i) {
        json c = factors_json(sch.groups.moduli[i]);
        c["ideal"] = sch.groups.index_names[i];
        comps.push_back(std::move(c));
    }
    json out = {{"command", "schur"},
                {"ok", true},
                {"field_size", detail::int_to_json(q)},
                {"ideals", std::move(ideals)},
                {"components", std::move(comps)},
                {"empty_index", sch.empty_index},
                {"inputs", in.record}};
    emit(out, output);
    return 0;
}

int run_oracle(const std::string& kind, const std::string& sg_path,
               const std::string& root_path, const std::string& module_path,
               std::size_t degree, std::size_t set_bound, const std::string& output) {
    Inputs in;
    CoefficientModule m = module_from_json(in.load("module", module_path));
    Root w;
    CoefficientModule rm;
    CohomologyResult snf;
    if (kind == "em" || kind == "zero") {
        if (sg_path.empty()) throw invalid_input("--kind " + kind + " needs --semigroup");
        FiniteSemigroup s = checked_semigroup(semigroup_from_json(in.load("semigroup", sg_path)));
        snf = kind == "em" ? em_cohomology(s, m, degree) : zero_cohomology(s, m, degree);
        w = kind == "em" ? root_total(s) : root_from_zero_semigroup(s);
        rm = restrict_to_root(m, w);
    } else if (kind == "partial") {
        if (root_path.empty()) throw invalid_input("--kind partial needs --root");
        w = root_from_json(in.load("root", root_path));
        snf = partial_cohomology(w, m, degree);
        rm = m;
    } else {
        throw invalid_input("--kind must be one of em, zero, partial");
    }
    auto brute = brute_force_cohomology(w, rm, degree, set_bound);
    Int snf_order = 1;
    for (const auto& d : snf.invariant_factors) snf_order *= d;
    bool consistent = snf.free_rank == 0 && brute.order == snf_order;
    json out = cohomology_result_to_json(snf);
    out["command"] = "oracle";
    out["ok"] = consistent;
    out["kind"] = kind;
    out["brute_order"] = detail::int_to_json(brute.order);
    out["brute_exponent"] = detail::int_to_json(brute.exponent);
    out["consistent"] = consistent;
    out["inputs"] = in.record;
    emit(out, output);
    return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology workbench for finite semigroups and roots"};
    app.require_subcommand(1);
    std::string output;

    std::string v_sg, v_module, v_root, v_mod;
    auto* c_validate =
        app.add_subcommand("validate", "check input documents and report law violations");
    c_validate->add_option("--semigroup", v_sg, "semigroup document");
    c_validate->add_option("--module", v_module, "module document (needs --semigroup)");
    c_validate->add_option("--root", v_root, "root document");
    c_validate->add_option("--modification", v_mod, "modification document");

    std::string h_kind = "em", h_sg, h_root, h_module;
    std::size_t h_degree = 2;
    auto* c_cohomology = app.add_subcommand("cohomology", "invariant factors of H^n");
    c_cohomology->add_option("--kind", h_kind, "em, zero, or partial")->capture_default_str();
    c_cohomology->add_option("--semigroup", h_sg, "semigroup document (em, zero)");
    c_cohomology->add_option("--root", h_root, "root document (partial)");
    c_cohomology->add_option("--module", h_module, "module document")->required();
    c_cohomology->add_option("--degree", h_degree, "cohomology degree")->capture_default_str();

    std::string t_sg, t_root, t_module;
    std::size_t t_degree = 2;
    auto* c_theta = app.add_subcommand(
        "theta", "restriction from EM cochains of S to a presenting total root");
    c_theta->add_option("--semigroup", t_sg, "semigroup document")->required();
    c_theta->add_option("--root", t_root, "root document")->required();
    c_theta->add_option("--module", t_module, "em module document")->required();
    c_theta->add_option("--degree", t_degree, "degree to compare")->capture_default_str();

    std::string m_group, m_emit;
    bool m_aut = false;
    std::size_t m_threads = 1;
    auto* c_mods = app.add_subcommand("modifications", "enumerate modifications of a group");
    c_mods->add_option("--group", m_group, "base group, e.g. cyclic:5")->required();
    c_mods->add_flag("--up-to-aut", m_aut, "collapse tables to automorphism orbits");
    c_mods->add_option("--emit-tables", m_emit, "write one table document per result here");
    c_mods->add_option("--threads", m_threads, "worker count (output-independent)")
        ->capture_default_str();

    std::string b_field;
    auto* c_brauer =
        app.add_subcommand("brauer", "component groups of the Brauer monoid of a field extension");
    c_brauer->add_option("--field", b_field, "extension as p:n")->required();

    std::string s_field, s_sg;
    auto* c_schur =
        app.add_subcommand("schur", "component groups of the Schur semilattice over a field");
    c_schur->add_option("--field", s_field, "field size q")->required();
    c_schur->add_option("--semigroup", s_sg, "semigroup document")->required();

    std::string o_kind = "em", o_sg, o_root, o_module;
    std::size_t o_degree = 2, o_bound = std::size_t{1} << 20;
    auto* c_oracle =
        app.add_subcommand("oracle", "cross-check the matrix pipeline against brute force");
    c_oracle->add_option("--kind", o_kind, "em, zero, or partial")->capture_default_str();
    c_oracle->add_option("--semigroup", o_sg, "semigroup document (em, zero)");
    c_oracle->add_option("--root", o_root, "root document (partial)");
    c_oracle->add_option("--module", o_module, "module document")->required();
    c_oracle->add_option("--degree", o_degree, "cohomology degree")->capture_default_str();
    c_oracle->add_option("--set-bound", o_bound, "largest cochain set to enumerate")
        ->capture_default_str();

    for (auto* sub : {c_validate, c_cohomology, c_theta, c_mods, c_brauer, c_schur, c_oracle})
        sub->add_option("--output", output, "write the result document here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (c_validate->parsed()) return run_validate(v_sg, v_module, v_root, v_mod, output);
        if (c_cohomology->parsed())
            return run_cohomology(h_kind, h_sg, h_root, h_module, h_degree, output);
        if (c_theta->parsed()) return run_theta(t_sg, t_root, t_module, t_degree, output);
        if (c_mods->parsed())
            return run_modifications(m_group, m_aut, m_emit, m_threads, output);
        if (c_brauer->parsed()) return run_brauer(b_field, output);
        if (c_schur->parsed()) return run_schur(s_sg, s_field, output);
        if (c_oracle->parsed())
            return run_oracle(o_kind, o_sg, o_root, o_module, o_degree, o_bound, output);
    } catch (const bound_exceeded& e) {
        emit(json{{"ok", false}, {"error", e.what()}, {"category", "bound"}}, output);
        return 2;
    } catch (const invalid_input& e) {
        emit(json{{"ok", false}, {"error", e.what()}, {"category", "invalid-input"}}, output);
        return 1;
    } catch (const internal_error& e) {
        emit(json{{"ok", false}, {"error", e.what()}, {"category", "internal"}}, output);
        return 1;
    } catch (const std::exception& e) {
        emit(json{{"ok", false}, {"error", e.what()}, {"category", "internal"}}, output);
        return 1;
    }
    return 1;
}
