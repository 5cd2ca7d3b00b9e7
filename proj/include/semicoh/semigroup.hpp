#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "common.hpp"

namespace semicoh {

// Finite semigroup on named elements with a row-major multiplication table:
// table[i * n + j] is the index of elements[i] * elements[j].
struct FiniteSemigroup {
    std::vector<std::string> elements;
    std::vector<std::size_t> table;
    std::optional<std::size_t> zero;
    std::optional<std::size_t> identity;

    std::size_t size() const { return elements.size(); }
    std::size_t product(std::size_t i, std::size_t j) const { return table[i * size() + j]; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == name) return i;
        return std::nullopt;
    }
};

struct SemigroupValidation {
    bool ok = true;
    std::string message;
    std::array<std::string, 3> witness{};  // filled for associativity failures
};

inline bool index_is_zero(const FiniteSemigroup& s, std::size_t z) {
    for (std::size_t x = 0; x < s.size(); ++x)
        if (s.product(z, x) != z || s.product(x, z) != z) return false;
    return true;
}

inline bool index_is_identity(const FiniteSemigroup& s, std::size_t e) {
    for (std::size_t x = 0; x < s.size(); ++x)
        if (s.product(e, x) != x || s.product(x, e) != x) return false;
    return true;
}

inline std::optional<std::size_t> detect_zero(const FiniteSemigroup& s) {
    for (std::size_t z = 0; z < s.size(); ++z)
        if (index_is_zero(s, z)) return z;
    return std::nullopt;
}

inline std::optional<std::size_t> detect_identity(const FiniteSemigroup& s) {
    for (std::size_t e = 0; e < s.size(); ++e)
        if (index_is_identity(s, e)) return e;
    return std::nullopt;
}

// Structural and semantic checks; the associativity witness is the first
// failing triple in lexicographic index order.
inline SemigroupValidation validate_semigroup(const FiniteSemigroup& s) {
    const std::size_t n = s.size();
    if (n == 0) return {false, "semigroup must be nonempty", {}};
    std::unordered_set<std::string> seen;
    for (const auto& name : s.elements) {
        if (name.empty()) return {false, "element names must be nonempty", {}};
        if (!seen.insert(name).second)
            return {false, "duplicate element name: " + name, {}};
    }
    if (s.table.size() != n * n) return {false, "table must be n x n", {}};
    for (std::size_t k = 0; k < s.table.size(); ++k)
        if (s.table[k] >= n)
            return {false, "table entry out of range at row " + std::to_string(k / n) +
                               " col " + std::to_string(k % n), {}};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (s.product(s.product(x, y), z) != s.product(x, s.product(y, z)))
                    return {false,
                            "associativity fails at (" + s.elements[x] + ", " + s.elements[y] +
                                ", " + s.elements[z] + ")",
                            {s.elements[x], s.elements[y], s.elements[z]}};
    if (s.zero) {
        if (*s.zero >= n) return {false, "claimed zero index out of range", {}};
        if (!index_is_zero(s, *s.zero))
            return {false, "claimed zero " + s.elements[*s.zero] + " is not a zero", {}};
    }
    if (s.identity) {
        if (*s.identity >= n) return {false, "claimed identity index out of range", {}};
        if (!index_is_identity(s, *s.identity))
            return {false, "claimed identity " + s.elements[*s.identity] + " is not an identity",
                    {}};
    }
    return {};
}

// Validates, then fills in zero/identity marks that hold but were not claimed.
inline FiniteSemigroup checked_semigroup(FiniteSemigroup s) {
    auto v = validate_semigroup(s);
    if (!v.ok) throw invalid_input(v.message);
    if (!s.zero) s.zero = detect_zero(s);
    if (!s.identity) s.identity = detect_identity(s);
    return s;
}

inline FiniteSemigroup make_semigroup(std::vector<std::string> elements,
                                      std::vector<std::size_t> table,
                                      std::optional<std::size_t> zero = std::nullopt,
                                      std::optional<std::size_t> identity = std::nullopt) {
    FiniteSemigroup s;
    s.elements = std::move(elements);
    s.table = std::move(table);
    s.zero = zero;
    s.identity = identity;
    return checked_semigroup(std::move(s));
}

inline FiniteSemigroup cyclic_group(std::size_t n) {
    if (n == 0) throw invalid_input("cyclic group order must be positive");
    FiniteSemigroup s;
    s.elements.push_back("e");
    for (std::size_t k = 1; k < n; ++k) s.elements.push_back("a" + std::to_string(k));
    s.table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.table[i * n + j] = (i + j) % n;
    return checked_semigroup(std::move(s));
}

inline FiniteSemigroup trivial_semigroup() {
    return make_semigroup({"e"}, {0});
}

inline FiniteSemigroup left_zero_semigroup(std::size_t k) {
    FiniteSemigroup s;
    for (std::size_t i = 0; i < k; ++i) s.elements.push_back("l" + std::to_string(i + 1));
    s.table.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s.table[i * k + j] = i;
    return checked_semigroup(std::move(s));
}

inline FiniteSemigroup right_zero_semigroup(std::size_t k) {
    FiniteSemigroup s;
    for (std::size_t i = 0; i < k; ++i) s.elements.push_back("r" + std::to_string(i + 1));
    s.table.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s.table[i * k + j] = j;
    return checked_semigroup(std::move(s));
}

// Every product is the zero element.
inline FiniteSemigroup null_semigroup_with_zero(std::size_t k) {
    FiniteSemigroup s;
    for (std::size_t i = 0; i < k; ++i) s.elements.push_back("n" + std::to_string(i + 1));
    s.elements.push_back("0");
    std::size_t n = k + 1;
    s.table.assign(n * n, k);
    return checked_semigroup(std::move(s));
}

// Two idempotents e > f with ef = fe = f.
inline FiniteSemigroup two_chain_semilattice() {
    return make_semigroup({"e", "f"}, {0, 1, 1, 1});
}

// Multiplicative group of residues coprime to n; names are the residues.
inline FiniteSemigroup unit_group_mod(std::size_t n) {
    if (n < 2) throw invalid_input("modulus must be at least 2");
    std::vector<std::size_t> residues;
    for (std::size_t r = 1; r < n; ++r)
        if (std::gcd(r, n) == 1) residues.push_back(r);
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t i = 0; i < residues.size(); ++i) pos[residues[i]] = i;
    FiniteSemigroup s;
    for (auto r : residues) s.elements.push_back(std::to_string(r));
    std::size_t k = residues.size();
    s.table.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            s.table[i * k + j] = pos[(residues[i] * residues[j]) % n];
    return checked_semigroup(std::move(s));
}

inline std::string fresh_name(const FiniteSemigroup& s, std::string candidate) {
    while (s.index_of(candidate)) candidate += "'";
    return candidate;
}

// Returns s unchanged when an identity already exists.
inline FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
    if (s.identity) return s;
    FiniteSemigroup t;
    t.elements = s.elements;
    t.elements.push_back(fresh_name(s, "1"));
    std::size_t n = s.size(), m = n + 1;
    t.table.assign(m * m, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.table[i * m + j] = s.product(i, j);
    for (std::size_t i = 0; i < m; ++i) {
        t.table[i * m + n] = i;
        t.table[n * m + i] = i;
    }
    t.identity = n;
    return checked_semigroup(std::move(t));
}

// Returns s unchanged when a zero already exists.
inline FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
    if (s.zero) return s;
    FiniteSemigroup t;
    t.elements = s.elements;
    t.elements.push_back(fresh_name(s, "0"));
    std::size_t n = s.size(), m = n + 1;
    t.table.assign(m * m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.table[i * m + j] = s.product(i, j);
    t.zero = n;
    return checked_semigroup(std::move(t));
}

inline FiniteSemigroup opposite(const FiniteSemigroup& s) {
    FiniteSemigroup t = s;
    std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.table[i * n + j] = s.product(j, i);
    return checked_semigroup(std::move(t));
}

inline bool is_ideal(const FiniteSemigroup& s, const std::vector<std::size_t>& idx) {
    std::vector<bool> in(s.size(), false);
    for (auto i : idx) in[i] = true;
    for (auto i : idx)
        for (std::size_t x = 0; x < s.size(); ++x)
            if (!in[s.product(i, x)] || !in[s.product(x, i)]) return false;
    return true;
}

// All two-sided ideals including the empty one, each a sorted index list,
// ordered by (size, lexicographic). Every ideal is a union of principal
// ideals, so unions of those are enumerated and deduplicated.
inline std::vector<std::vector<std::size_t>> enumerate_ideals(const FiniteSemigroup& s) {
    const std::size_t n = s.size();
    if (n > 64) throw bound_exceeded("ideal enumeration limited to 64 elements");
    std::vector<std::uint64_t> principal(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<bool> in(n, false);
        std::vector<std::size_t> stack{x};
        in[x] = true;
        while (!stack.empty()) {
            std::size_t y = stack.back();
            stack.pop_back();
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t p : {s.product(y, z), s.product(z, y)})
                    if (!in[p]) {
                        in[p] = true;
                        stack.push_back(p);
                    }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (in[i]) principal[x] |= std::uint64_t(1) << i;
    }
    std::vector<std::uint64_t> distinct(principal);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() > 20) throw bound_exceeded("too many principal ideals to combine");
    std::unordered_set<std::uint64_t> masks{0};
    for (std::uint64_t sub = 1; sub < (std::uint64_t(1) << distinct.size()); ++sub) {
        std::uint64_t m = 0;
        for (std::size_t b = 0; b < distinct.size(); ++b)
            if (sub & (std::uint64_t(1) << b)) m |= distinct[b];
        masks.insert(m);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto m : masks) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (std::uint64_t(1) << i)) idx.push_back(i);
        if (!idx.empty() && !is_ideal(s, idx)) throw internal_error("non-ideal union");
        out.push_back(std::move(idx));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// Collapse a nonempty ideal to a single zero; surviving elements keep their
// names and relative order, the new zero goes last.
inline FiniteSemigroup rees_quotient(const FiniteSemigroup& s,
                                     const std::vector<std::size_t>& ideal) {
    if (ideal.empty()) throw invalid_input("rees quotient needs a nonempty ideal");
    for (auto i : ideal)
        if (i >= s.size()) throw invalid_input("ideal index out of range");
    if (!is_ideal(s, ideal)) throw invalid_input("subset is not a two-sided ideal");
    std::vector<bool> in(s.size(), false);
    for (auto i : ideal) in[i] = true;
    std::vector<std::size_t> survivors;
    std::unordered_map<std::size_t, std::size_t> newidx;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!in[i]) {
            newidx[i] = survivors.size();
            survivors.push_back(i);
        }
    FiniteSemigroup t;
    for (auto i : survivors) t.elements.push_back(s.elements[i]);
    FiniteSemigroup name_probe;
    name_probe.elements = t.elements;
    t.elements.push_back(fresh_name(name_probe, "0"));
    std::size_t m = survivors.size() + 1, z = survivors.size();
    t.table.assign(m * m, z);
    for (std::size_t a = 0; a < survivors.size(); ++a)
        for (std::size_t b = 0; b < survivors.size(); ++b) {
            std::size_t p = s.product(survivors[a], survivors[b]);
            if (!in[p]) t.table[a * m + b] = newidx[p];
        }
    t.zero = z;
    return checked_semigroup(std::move(t));
}

}  // namespace semicoh
