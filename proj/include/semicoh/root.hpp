#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace semicoh {

// Finite set with a partial product, weakly associative: whenever both
// bracketings of xyz are fully defined they agree.
struct Root {
    static constexpr std::size_t undef = static_cast<std::size_t>(-1);

    std::vector<std::string> elements;
    std::vector<std::size_t> prod;  // n*n, row-major, undef where no product

    std::size_t size() const { return elements.size(); }
    bool defined(std::size_t i, std::size_t j) const { return prod[i * size() + j] != undef; }
    std::size_t product(std::size_t i, std::size_t j) const { return prod[i * size() + j]; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == name) return i;
        return std::nullopt;
    }
};

inline void check_weak_associativity(const Root& w) {
    const std::size_t n = w.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!w.defined(x, y)) continue;
            std::size_t xy = w.product(x, y);
            for (std::size_t z = 0; z < n; ++z) {
                if (!w.defined(y, z) || !w.defined(xy, z)) continue;
                std::size_t yz = w.product(y, z);
                if (!w.defined(x, yz)) continue;
                if (w.product(xy, z) != w.product(x, yz))
                    throw invalid_input("weak associativity fails at (" + w.elements[x] + ", " +
                                        w.elements[y] + ", " + w.elements[z] + ")");
            }
        }
}

inline Root make_root(std::vector<std::string> elements,
                      const std::vector<std::array<std::string, 3>>& products) {
    Root w;
    w.elements = std::move(elements);
    std::set<std::string> seen;
    for (const auto& name : w.elements) {
        if (name.empty()) throw invalid_input("root element names must be nonempty");
        if (!seen.insert(name).second) throw invalid_input("duplicate root element: " + name);
    }
    w.prod.assign(w.size() * w.size(), Root::undef);
    for (const auto& t : products) {
        auto x = w.index_of(t[0]), y = w.index_of(t[1]), z = w.index_of(t[2]);
        if (!x || !y || !z)
            throw invalid_input("product entry references unknown element (" + t[0] + ", " +
                                t[1] + ", " + t[2] + ")");
        if (w.prod[*x * w.size() + *y] != Root::undef)
            throw invalid_input("duplicate product entry for (" + t[0] + ", " + t[1] + ")");
        w.prod[*x * w.size() + *y] = *z;
    }
    check_weak_associativity(w);
    return w;
}

// Lexicographically ordered n-tuples whose every contiguous sub-product is
// defined and lands in W; value[i] is the full product of tuples[i].
struct TupleSet {
    std::size_t degree = 0;
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> value;

    std::size_t size() const { return tuples.size(); }

    std::optional<std::size_t> index_of(const std::vector<std::size_t>& t) const {
        auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
        if (it == tuples.end() || *it != t) return std::nullopt;
        return static_cast<std::size_t>(it - tuples.begin());
    }
};

constexpr std::size_t default_tuple_cap = 1000000;

// Degree-by-degree construction: a tuple joins W_n when both borders are in
// W_{n-1} and x_1 * prod(rest) is defined. The other association of the full
// product must then exist and agree; a mismatch means the data is not the
// root of any semigroup.
inline std::vector<TupleSet> wn_tuples_upto(const Root& w, std::size_t n,
                                            std::size_t cap = default_tuple_cap) {
    if (n == 0) throw invalid_input("tuple degree must be at least 1");
    std::vector<TupleSet> levels(n + 1);  // levels[k] for 1 <= k <= n
    TupleSet& w1 = levels[1];
    w1.degree = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        w1.tuples.push_back({i});
        w1.value.push_back(i);
    }
    for (std::size_t k = 2; k <= n; ++k) {
        const TupleSet& prev = levels[k - 1];
        TupleSet& cur = levels[k];
        cur.degree = k;
        for (std::size_t x = 0; x < w.size(); ++x)
            for (std::size_t r = 0; r < prev.size(); ++r) {
                const auto& rest = prev.tuples[r];
                if (!w.defined(x, prev.value[r])) continue;
                std::vector<std::size_t> left(rest.begin(), rest.end() - 1);
                left.insert(left.begin(), x);
                auto li = prev.index_of(left);
                if (!li) continue;
                std::size_t val = w.product(x, prev.value[r]);
                std::size_t last = rest.back();
                if (!w.defined(prev.value[*li], last) ||
                    w.product(prev.value[*li], last) != val)
                    throw invalid_input("interval coherence violated at a degree-" +
                                        std::to_string(k) + " tuple starting with " +
                                        w.elements[x]);
                if (cur.tuples.size() >= cap)
                    throw bound_exceeded("tuple set at degree " + std::to_string(k) +
                                         " exceeds cap " + std::to_string(cap));
                std::vector<std::size_t> t(rest.size() + 1);
                t[0] = x;
                std::copy(rest.begin(), rest.end(), t.begin() + 1);
                cur.tuples.push_back(std::move(t));
                cur.value.push_back(val);
            }
        // Outer loop runs x ascending over lex-sorted rests, so order is lex.
        for (std::size_t i = 1; i < cur.tuples.size(); ++i)
            if (!(cur.tuples[i - 1] < cur.tuples[i]))
                throw internal_error("tuple enumeration out of order");
    }
    return levels;
}

inline TupleSet wn_tuples(const Root& w, std::size_t n, std::size_t cap = default_tuple_cap) {
    return std::move(wn_tuples_upto(w, n, cap)[n]);
}

struct JRootResult {
    bool ok = true;
    std::array<std::string, 3> witness{};
};

// J-root: m(x,y)=x and m(y,z)=z force m(x,z) to be defined.
inline JRootResult check_j_root(const Root& w) {
    const std::size_t n = w.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!w.defined(x, y) || w.product(x, y) != x) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (!w.defined(y, z) || w.product(y, z) != z) continue;
                if (!w.defined(x, z))
                    return {false, {w.elements[x], w.elements[y], w.elements[z]}};
            }
        }
    return {};
}

struct CanonicityResult {
    bool pass = true;
    std::vector<std::string> word;       // a word with two reduced descendants
    std::vector<std::string> reduced_a;  // the two distinct reduced forms
    std::vector<std::string> reduced_b;
};

namespace detail {

using Word = std::vector<std::size_t>;

inline const std::set<Word>& reduced_descendants(const Root& w, const Word& word,
                                                 std::map<Word, std::set<Word>>& memo) {
    auto it = memo.find(word);
    if (it != memo.end()) return it->second;
    std::set<Word> out;
    bool any = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (!w.defined(word[i], word[i + 1])) continue;
        any = true;
        Word next;
        next.reserve(word.size() - 1);
        next.insert(next.end(), word.begin(), word.begin() + i);
        next.push_back(w.product(word[i], word[i + 1]));
        next.insert(next.end(), word.begin() + i + 2, word.end());
        const auto& sub = reduced_descendants(w, next, memo);
        out.insert(sub.begin(), sub.end());
    }
    if (!any) out.insert(word);
    return memo.emplace(word, std::move(out)).first->second;
}

}  // namespace detail

// Confluence of the rewriting system {xy -> m(x,y)} on all words of length
// at most L: every word must have a unique reduced descendant. Covers both
// critical-pair resolution and uniqueness of reduced decompositions up to L.
inline CanonicityResult check_bounded_canonicity(const Root& w, std::size_t l) {
    if (l < 2) throw invalid_input("canonicity bound must be at least 2");
    double total = 0;
    for (std::size_t k = 1, pw = 1; k <= l; ++k) {
        pw *= w.size() ? w.size() : 1;
        total += static_cast<double>(pw);
        if (total > 4e6) throw bound_exceeded("too many words for canonicity bound");
    }
    std::map<detail::Word, std::set<detail::Word>> memo;
    detail::Word word;
    auto name_word = [&](const detail::Word& v) {
        std::vector<std::string> names;
        for (auto i : v) names.push_back(w.elements[i]);
        return names;
    };
    std::function<std::optional<CanonicityResult>(std::size_t)> dfs =
        [&](std::size_t depth) -> std::optional<CanonicityResult> {
        if (!word.empty()) {
            const auto& desc = detail::reduced_descendants(w, word, memo);
            if (desc.size() > 1) {
                auto it = desc.begin();
                CanonicityResult r;
                r.pass = false;
                r.word = name_word(word);
                r.reduced_a = name_word(*it);
                r.reduced_b = name_word(*std::next(it));
                return r;
            }
        }
        if (depth == l) return std::nullopt;
        for (std::size_t x = 0; x < w.size(); ++x) {
            word.push_back(x);
            if (auto r = dfs(depth + 1)) return r;
            word.pop_back();
        }
        return std::nullopt;
    };
    if (auto r = dfs(0)) return *r;
    return {};
}

inline Root root_total(const FiniteSemigroup& s) {
    Root w;
    w.elements = s.elements;
    w.prod.assign(s.size() * s.size(), Root::undef);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) w.prod[i * s.size() + j] = s.product(i, j);
    check_weak_associativity(w);
    return w;
}

// W = S minus its zero; u*v kept exactly when nonzero in S.
inline Root root_from_zero_semigroup(const FiniteSemigroup& s) {
    if (!s.zero) throw invalid_input("semigroup has no zero element");
    std::size_t z = *s.zero;
    Root w;
    std::vector<std::size_t> old_of;
    std::vector<std::size_t> new_of(s.size(), Root::undef);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != z) {
            new_of[i] = old_of.size();
            old_of.push_back(i);
            w.elements.push_back(s.elements[i]);
        }
    std::size_t n = w.elements.size();
    w.prod.assign(n * n, Root::undef);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t p = s.product(old_of[a], old_of[b]);
            if (p != z) w.prod[a * n + b] = new_of[p];
        }
    check_weak_associativity(w);
    return w;
}

// Disjoint union of the factors with only within-factor products; element
// names get "T."/"U." prefixes so the union is disjoint by construction.
inline Root root_free_product(const FiniteSemigroup& t, const FiniteSemigroup& u) {
    Root w;
    for (const auto& name : t.elements) w.elements.push_back("T." + name);
    for (const auto& name : u.elements) w.elements.push_back("U." + name);
    std::size_t nt = t.size(), n = nt + u.size();
    w.prod.assign(n * n, Root::undef);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < nt; ++j) w.prod[i * n + j] = t.product(i, j);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            w.prod[(nt + i) * n + (nt + j)] = nt + u.product(i, j);
    check_weak_associativity(w);
    return w;
}

enum class AbsorbSide { left, right };

// W = U + one extra generator p; side=right realizes <U,p | Up=p>, side=left
// its opposite <U,p | pU=p>.
inline Root root_absorbing_generator(const FiniteSemigroup& u, AbsorbSide side) {
    Root w;
    w.elements = u.elements;
    std::string p = "p";
    while (std::find(w.elements.begin(), w.elements.end(), p) != w.elements.end()) p += "'";
    w.elements.push_back(p);
    std::size_t nu = u.size(), n = nu + 1;
    w.prod.assign(n * n, Root::undef);
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < nu; ++j) w.prod[i * n + j] = u.product(i, j);
    for (std::size_t i = 0; i < nu; ++i) {
        if (side == AbsorbSide::right)
            w.prod[i * n + nu] = nu;  // u * p = p
        else
            w.prod[nu * n + i] = nu;  // p * u = p
    }
    check_weak_associativity(w);
    return w;
}

}  // namespace semicoh
