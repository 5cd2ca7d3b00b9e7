#pragma once
// JSON serialization for semigroups, modules, roots, modifications, and
// result documents. Parsers reject schema violations with JSON-pointer
// paths; law checks (associativity, module axioms) stay with the callers.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coeff_module.hpp"
#include "cohomology.hpp"
#include "common.hpp"
#include "modification.hpp"
#include "root.hpp"
#include "semigroup.hpp"

namespace semicoh {

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
    throw invalid_input((path.empty() ? "/" : path) + ": " + what);
}

inline void require_object(const nlohmann::json& j, const std::string& path,
                           const std::vector<std::string>& required,
                           const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) schema_error(path, "expected an object");
    for (const auto& key : required)
        if (!j.contains(key)) schema_error(path + "/" + key, "missing required field");
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (std::find(required.begin(), required.end(), k) == required.end() &&
            std::find(optional.begin(), optional.end(), k) == optional.end())
            schema_error(path + "/" + k, "unknown field");
    }
}

inline const nlohmann::json& require_array(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array");
    return j;
}

inline std::string require_string(const nlohmann::json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, "expected a string");
    return j.get<std::string>();
}

inline std::size_t require_index(const nlohmann::json& j, std::size_t bound,
                                 const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        schema_error(path, "expected a nonnegative integer");
    auto v = j.get<std::uint64_t>();
    if (v >= bound)
        schema_error(path, "index " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

inline Int int_from_json(const nlohmann::json& j, const std::string& path) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (k == s.size()) schema_error(path, "not an integer: '" + s + "'");
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                schema_error(path, "not an integer: '" + s + "'");
        return Int(s);
    }
    schema_error(path, "expected an integer or a decimal string");
}

inline nlohmann::json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

// rows x cols integer matrix given as `rows` arrays of `cols` entries
inline IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols,
                                  const std::string& path) {
    require_array(j, path);
    if (j.size() != rows)
        schema_error(path, "expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "/" + std::to_string(r);
        require_array(j[r], rp);
        if (j[r].size() != cols)
            schema_error(rp, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = int_from_json(j[r][c], rp + "/" + std::to_string(c));
    }
    return m;
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<std::string> names_from_json(const nlohmann::json& j,
                                                const std::string& path) {
    require_array(j, path);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string ip = path + "/" + std::to_string(i);
        std::string name = require_string(j[i], ip);
        if (name.empty()) schema_error(ip, "element names must be nonempty");
        if (!seen.insert(name).second) schema_error(ip, "duplicate element name '" + name + "'");
        out.push_back(std::move(name));
    }
    return out;
}

}  // namespace detail

inline FiniteSemigroup semigroup_from_json(const nlohmann::json& j) {
    detail::require_object(j, "", {"elements", "table"}, {"zero", "identity"});
    FiniteSemigroup s;
    s.elements = detail::names_from_json(j["elements"], "/elements");
    const std::size_t n = s.elements.size();
    detail::require_array(j["table"], "/table");
    if (j["table"].size() != n)
        detail::schema_error("/table", "expected " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < n; ++r) {
        const std::string rp = "/table/" + std::to_string(r);
        detail::require_array(j["table"][r], rp);
        if (j["table"][r].size() != n)
            detail::schema_error(rp, "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            s.table.push_back(
                detail::require_index(j["table"][r][c], n, rp + "/" + std::to_string(c)));
    }
    if (j.contains("zero") && !j["zero"].is_null())
        s.zero = detail::require_index(j["zero"], n, "/zero");
    if (j.contains("identity") && !j["identity"].is_null())
        s.identity = detail::require_index(j["identity"], n, "/identity");
    return s;
}

inline nlohmann::json semigroup_to_json(const FiniteSemigroup& s) {
    nlohmann::json j;
    j["elements"] = s.elements;
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t r = 0; r < s.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < s.size(); ++c) row.push_back(s.product(r, c));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["zero"] = s.zero ? nlohmann::json(*s.zero) : nlohmann::json(nullptr);
    j["identity"] = s.identity ? nlohmann::json(*s.identity) : nlohmann::json(nullptr);
    return j;
}

inline CoefficientModule module_from_json(const nlohmann::json& j) {
    detail::require_object(j, "", {"generators", "relations", "kind", "actions"});
    CoefficientModule m;
    const std::size_t g =
        detail::require_index(j["generators"], std::numeric_limits<std::size_t>::max() / 2,
                              "/generators");
    detail::require_array(j["relations"], "/relations");
    const std::size_t rc = j["relations"].size();
    // relations are stored column-wise: each entry is one g-row column
    IntMatrix rel(g, rc);
    for (std::size_t c = 0; c < rc; ++c) {
        const std::string cp = "/relations/" + std::to_string(c);
        detail::require_array(j["relations"][c], cp);
        if (j["relations"][c].size() != g)
            detail::schema_error(cp, "expected " + std::to_string(g) + " entries");
        for (std::size_t r = 0; r < g; ++r)
            rel(r, c) = detail::int_from_json(j["relations"][c][r],
                                              cp + "/" + std::to_string(r));
    }
    m.group = PresentedAbelianGroup(g, std::move(rel));
    const std::string kind = detail::require_string(j["kind"], "/kind");
    if (kind == "em")
        m.kind = ModuleKind::em;
    else if (kind == "zero")
        m.kind = ModuleKind::zero;
    else if (kind == "root")
        m.kind = ModuleKind::root;
    else
        detail::schema_error("/kind", "expected one of 'em', 'zero', 'root'");
    if (!j["actions"].is_object()) detail::schema_error("/actions", "expected an object");
    for (const auto& item : j["actions"].items())
        m.actions.emplace(item.key(), detail::matrix_from_json(item.value(), g, g,
                                                               "/actions/" + item.key()));
    return m;
}

inline nlohmann::json module_to_json(const CoefficientModule& m) {
    nlohmann::json j;
    j["generators"] = m.group.gens;
    nlohmann::json rel = nlohmann::json::array();
    for (std::size_t c = 0; c < m.group.relations.cols(); ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (std::size_t r = 0; r < m.group.gens; ++r)
            col.push_back(detail::int_to_json(m.group.relations(r, c)));
        rel.push_back(std::move(col));
    }
    j["relations"] = std::move(rel);
    j["kind"] = kind_name(m.kind);
    nlohmann::json acts = nlohmann::json::object();
    for (const auto& [name, mat] : m.actions) acts[name] = detail::matrix_to_json(mat);
    j["actions"] = std::move(acts);
    return j;
}

inline Root root_from_json(const nlohmann::json& j) {
    detail::require_object(j, "", {"elements", "products"});
    auto elements = detail::names_from_json(j["elements"], "/elements");
    detail::require_array(j["products"], "/products");
    std::vector<std::array<std::string, 3>> products;
    for (std::size_t i = 0; i < j["products"].size(); ++i) {
        const std::string ip = "/products/" + std::to_string(i);
        detail::require_array(j["products"][i], ip);
        if (j["products"][i].size() != 3)
            detail::schema_error(ip, "expected a [x, y, z] name triple");
        std::array<std::string, 3> t;
        for (std::size_t k = 0; k < 3; ++k)
            t[k] = detail::require_string(j["products"][i][k], ip + "/" + std::to_string(k));
        products.push_back(std::move(t));
    }
    return make_root(std::move(elements), products);
}

inline nlohmann::json root_to_json(const Root& w) {
    nlohmann::json j;
    j["elements"] = w.elements;
    nlohmann::json products = nlohmann::json::array();
    for (std::size_t x = 0; x < w.size(); ++x)
        for (std::size_t y = 0; y < w.size(); ++y)
            if (w.defined(x, y))
                products.push_back(nlohmann::json::array(
                    {w.elements[x], w.elements[y], w.elements[w.product(x, y)]}));
    j["products"] = std::move(products);
    return j;
}

inline Modification modification_from_json(const nlohmann::json& j) {
    detail::require_object(j, "", {"group", "keep"});
    const std::string spec = detail::require_string(j["group"], "/group");
    const std::string prefix = "cyclic:";
    if (spec.rfind(prefix, 0) != 0)
        detail::schema_error("/group", "expected 'cyclic:n'");
    std::size_t n = 0;
    for (std::size_t k = prefix.size(); k < spec.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(spec[k])))
            detail::schema_error("/group", "expected 'cyclic:n'");
        n = n * 10 + static_cast<std::size_t>(spec[k] - '0');
        if (n > 1000) detail::schema_error("/group", "group order too large");
    }
    if (spec.size() == prefix.size() || n == 0)
        detail::schema_error("/group", "group order must be positive");
    const std::size_t side = n - 1;
    detail::require_array(j["keep"], "/keep");
    if (j["keep"].size() != side)
        detail::schema_error("/keep", "expected " + std::to_string(side) + " rows");
    std::vector<std::uint8_t> keep;
    for (std::size_t r = 0; r < side; ++r) {
        const std::string rp = "/keep/" + std::to_string(r);
        detail::require_array(j["keep"][r], rp);
        if (j["keep"][r].size() != side)
            detail::schema_error(rp, "expected " + std::to_string(side) + " entries");
        for (std::size_t c = 0; c < side; ++c) {
            const auto& v = j["keep"][r][c];
            if (!v.is_boolean())
                detail::schema_error(rp + "/" + std::to_string(c), "expected a boolean");
            keep.push_back(v.get<bool>() ? 1 : 0);
        }
    }
    return make_modification(cyclic_group(n), std::move(keep));
}

inline nlohmann::json modification_to_json(const Modification& m) {
    nlohmann::json j;
    j["group"] = "cyclic:" + std::to_string(m.group.size());
    const std::size_t side = m.group.size() - 1;
    nlohmann::json keep = nlohmann::json::array();
    for (std::size_t r = 0; r < side; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < side; ++c)
            row.push_back(m.keep[r * side + c] != 0);
        keep.push_back(std::move(row));
    }
    j["keep"] = std::move(keep);
    return j;
}

inline nlohmann::json cohomology_result_to_json(const CohomologyResult& r) {
    nlohmann::json j;
    j["degree"] = r.degree;
    nlohmann::json f = nlohmann::json::array();
    for (const auto& d : r.invariant_factors) f.push_back(detail::int_to_json(d));
    j["invariant_factors"] = std::move(f);
    j["free_rank"] = r.free_rank;
    j["cochain_sizes"] = r.cochain_sizes;
    return j;
}

}  // namespace semicoh
