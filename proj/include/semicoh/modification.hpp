#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semicoh/semigroup.hpp"

namespace semicoh {

// Semigroup structure on G with an adjoined zero where every product of group
// elements is either the group product or 0 and the identity keeps acting as
// identity.  The keep table lists which non-identity products survive,
// row-major over the non-identity elements in carrier order.
struct Modification {
    FiniteSemigroup group;
    std::vector<std::uint8_t> keep;
};

namespace detail {

struct GroupView {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t id = 0;
    std::vector<std::size_t> nonid;  // non-identity element indices, carrier order
    std::vector<std::size_t> pos;    // element index -> slot in nonid, npos for id
    std::vector<std::size_t> inv;    // element index -> inverse element index
};

inline GroupView group_view(const FiniteSemigroup& g) {
    auto v = validate_semigroup(g);
    if (!v.ok) throw invalid_input("modification base is not a semigroup: " + v.message);
    auto id = detect_identity(g);
    if (!id) throw invalid_input("modification base has no identity");
    GroupView view;
    view.id = *id;
    view.pos.assign(g.size(), GroupView::npos);
    view.inv.assign(g.size(), GroupView::npos);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i != view.id) {
            view.pos[i] = view.nonid.size();
            view.nonid.push_back(i);
        }
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.product(i, j) == view.id && g.product(j, i) == view.id) view.inv[i] = j;
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (view.inv[i] == GroupView::npos)
            throw invalid_input("modification base is not a group: " + g.elements[i] +
                                " has no inverse");
    return view;
}

// keep extended by the identity rules: products with the identity survive.
inline bool kept(const std::vector<std::uint8_t>& keep, const GroupView& v, std::size_t x,
                 std::size_t y) {
    if (x == v.id || y == v.id) return true;
    return keep[v.pos[x] * v.nonid.size() + v.pos[y]] != 0;
}

}  // namespace detail

struct ModificationCheck {
    bool ok = true;
    std::array<std::string, 3> witness{};
};

// Associativity of the induced table, stated purely on keep flags: for
// non-identity x, y, z the products (x*y)*z and x*(y*z) vanish together.
inline ModificationCheck is_modification(const FiniteSemigroup& g,
                                         const std::vector<std::uint8_t>& keep) {
    auto view = detail::group_view(g);
    std::size_t k = view.nonid.size();
    if (keep.size() != k * k)
        throw invalid_input("keep table must have " + std::to_string(k * k) + " entries");
    for (auto x : view.nonid)
        for (auto y : view.nonid)
            for (auto z : view.nonid) {
                bool lhs = detail::kept(keep, view, x, y) &&
                           detail::kept(keep, view, g.product(x, y), z);
                bool rhs = detail::kept(keep, view, y, z) &&
                           detail::kept(keep, view, x, g.product(y, z));
                if (lhs != rhs)
                    return {false, {g.elements[x], g.elements[y], g.elements[z]}};
            }
    return {};
}

inline Modification make_modification(FiniteSemigroup g, std::vector<std::uint8_t> keep) {
    auto c = is_modification(g, keep);
    if (!c.ok)
        throw invalid_input("not a modification: (" + c.witness[0] + ", " + c.witness[1] +
                            ", " + c.witness[2] + ") breaks associativity");
    return {std::move(g), std::move(keep)};
}

inline Modification full_modification(FiniteSemigroup g) {
    std::size_t k = detail::group_view(g).nonid.size();
    return {std::move(g), std::vector<std::uint8_t>(k * k, 1)};
}

inline Modification null_modification(FiniteSemigroup g) {
    std::size_t k = detail::group_view(g).nonid.size();
    return {std::move(g), std::vector<std::uint8_t>(k * k, 0)};
}

// Induced table on G plus a fresh zero.  Element order is preserved.
inline FiniteSemigroup modification_semigroup(const Modification& s) {
    auto view = detail::group_view(s.group);
    std::size_t n = s.group.size();
    FiniteSemigroup out;
    out.elements = s.group.elements;
    out.elements.push_back(fresh_name(out, "0"));
    out.table.assign((n + 1) * (n + 1), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (detail::kept(s.keep, view, i, j)) out.table[i * (n + 1) + j] = s.group.product(i, j);
    out.zero = n;
    out.identity = view.id;
    auto v = validate_semigroup(out);
    if (!v.ok) throw internal_error("modification table failed validation: " + v.message);
    return out;
}

inline std::vector<std::vector<std::size_t>> automorphism_group(const FiniteSemigroup& g) {
    std::size_t n = g.size();
    if (n > 9) throw bound_exceeded("automorphism search is limited to 9 elements");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> auts;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (perm[g.product(i, j)] != g.product(perm[i], perm[j])) {
                    ok = false;
                    break;
                }
        if (ok) auts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return auts;
}

namespace detail {

// Flag permutations induced by automorphisms: target flag (i,j) reads the
// source flag (phi i, phi j).
inline std::vector<std::vector<std::size_t>> flag_actions(const FiniteSemigroup& g,
                                                          const GroupView& view) {
    auto auts = automorphism_group(g);
    std::size_t k = view.nonid.size();
    std::vector<std::vector<std::size_t>> actions;
    for (const auto& phi : auts) {
        std::vector<std::size_t> act(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                std::size_t pi = view.pos[phi[view.nonid[i]]];
                std::size_t pj = view.pos[phi[view.nonid[j]]];
                act[i * k + j] = pi * k + pj;
            }
        actions.push_back(std::move(act));
    }
    return actions;
}

inline std::vector<std::uint8_t> apply_flag_action(const std::vector<std::uint8_t>& keep,
                                                   const std::vector<std::size_t>& act) {
    std::vector<std::uint8_t> out(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) out[t] = keep[act[t]];
    return out;
}

}  // namespace detail

// Lexicographically minimal keep table over the automorphism orbit.
inline std::vector<std::uint8_t> canonical_keep(const FiniteSemigroup& g,
                                                const std::vector<std::uint8_t>& keep) {
    auto view = detail::group_view(g);
    auto best = keep;
    for (const auto& a : detail::flag_actions(g, view))
        best = std::min(best, detail::apply_flag_action(keep, a));
    return best;
}

namespace detail {

// One associativity triple as four flag literals; -1 means constant true
// (the corresponding inner product is the identity).
struct KeepConstraint {
    int l1, l2, r1, r2;
};

struct KeepSearch {
    std::size_t flags = 0;
    std::vector<KeepConstraint> cons;
    std::vector<std::vector<std::size_t>> by_flag;
    std::uint64_t assigned = 0, value = 0;
    std::vector<std::uint64_t> solutions;

    int lit(int f) const {
        if (f < 0) return 1;
        std::uint64_t bit = 1ull << f;
        if (!(assigned & bit)) return 2;
        return (value & bit) ? 1 : 0;
    }
    static int both(int a, int b) {
        if (a == 0 || b == 0) return 0;
        if (a == 1 && b == 1) return 1;
        return 2;
    }

    bool assign(std::size_t f, bool v, std::vector<std::size_t>& trail) {
        std::uint64_t bit = 1ull << f;
        if (assigned & bit) return ((value & bit) != 0) == v;
        assigned |= bit;
        if (v) value |= bit;
        trail.push_back(f);
        return true;
    }

    void undo(std::vector<std::size_t>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            std::uint64_t bit = 1ull << trail.back();
            assigned &= ~bit;
            value &= ~bit;
            trail.pop_back();
        }
    }

    // Two-watched-sides propagation of lhs <-> rhs over newly assigned flags.
    bool propagate(std::vector<std::size_t>& trail, std::size_t from) {
        for (std::size_t idx = from; idx < trail.size(); ++idx)
            for (auto ci : by_flag[trail[idx]]) {
                const auto& c = cons[ci];
                int lhs = both(lit(c.l1), lit(c.l2));
                int rhs = both(lit(c.r1), lit(c.r2));
                if (lhs != 2 && rhs != 2) {
                    if (lhs != rhs) return false;
                    continue;
                }
                if (lhs == 1) {
                    for (int f : {c.r1, c.r2})
                        if (f >= 0 && !(assigned >> f & 1))
                            if (!assign(static_cast<std::size_t>(f), true, trail)) return false;
                } else if (rhs == 1) {
                    for (int f : {c.l1, c.l2})
                        if (f >= 0 && !(assigned >> f & 1))
                            if (!assign(static_cast<std::size_t>(f), true, trail)) return false;
                } else if (lhs == 0) {
                    int s1 = lit(c.r1), s2 = lit(c.r2);
                    if (s1 == 1 && s2 == 2) {
                        if (!assign(static_cast<std::size_t>(c.r2), false, trail)) return false;
                    } else if (s2 == 1 && s1 == 2) {
                        if (!assign(static_cast<std::size_t>(c.r1), false, trail)) return false;
                    }
                } else if (rhs == 0) {
                    int s1 = lit(c.l1), s2 = lit(c.l2);
                    if (s1 == 1 && s2 == 2) {
                        if (!assign(static_cast<std::size_t>(c.l2), false, trail)) return false;
                    } else if (s2 == 1 && s1 == 2) {
                        if (!assign(static_cast<std::size_t>(c.l1), false, trail)) return false;
                    }
                }
            }
        return true;
    }

    void dfs(std::vector<std::size_t>& trail) {
        std::size_t f = flags;
        for (std::size_t i = 0; i < flags; ++i)
            if (!(assigned >> i & 1)) {
                f = i;
                break;
            }
        if (f == flags) {
            solutions.push_back(value);
            return;
        }
        for (bool v : {false, true}) {
            std::size_t mark = trail.size();
            if (assign(f, v, trail) && propagate(trail, mark)) dfs(trail);
            undo(trail, mark);
        }
    }
};

inline KeepSearch compile_keep_search(const FiniteSemigroup& g, const GroupView& view) {
    KeepSearch s;
    std::size_t k = view.nonid.size();
    s.flags = k * k;
    auto flag = [&](std::size_t x, std::size_t y) -> int {
        return static_cast<int>(view.pos[x] * k + view.pos[y]);
    };
    for (auto x : view.nonid)
        for (auto y : view.nonid)
            for (auto z : view.nonid) {
                KeepConstraint c;
                c.l1 = flag(x, y);
                std::size_t xy = g.product(x, y);
                c.l2 = xy == view.id ? -1 : flag(xy, z);
                c.r1 = flag(y, z);
                std::size_t yz = g.product(y, z);
                c.r2 = yz == view.id ? -1 : flag(x, yz);
                s.cons.push_back(c);
            }
    s.by_flag.assign(s.flags, {});
    for (std::size_t ci = 0; ci < s.cons.size(); ++ci)
        for (int f : {s.cons[ci].l1, s.cons[ci].l2, s.cons[ci].r1, s.cons[ci].r2})
            if (f >= 0) {
                auto& list = s.by_flag[static_cast<std::size_t>(f)];
                if (list.empty() || list.back() != ci) list.push_back(ci);
            }
    return s;
}

}  // namespace detail

struct ModificationList {
    std::vector<Modification> mods;          // sorted by keep table
    std::vector<std::size_t> orbit_sizes;    // parallel to mods; 1s without dedup
    std::size_t total = 0;                   // mods.size()
    std::size_t proper = 0;                  // entries with at least one dropped product
    std::size_t raw_total = 0;               // table count before any dedup
};

inline ModificationList enumerate_modifications(const FiniteSemigroup& g, bool up_to_aut = false,
                                                std::size_t max_order = 9, unsigned threads = 1) {
    if (g.size() > max_order)
        throw bound_exceeded("modification enumeration is limited to groups of order " +
                             std::to_string(max_order));
    auto view = detail::group_view(g);
    auto base = detail::compile_keep_search(g, view);
    std::size_t flags = base.flags;

    // Partition by the first two flags; branches are explored in table order,
    // so concatenation keeps the output lexicographic whatever the thread count.
    std::size_t split = std::min<std::size_t>(2, flags);
    std::vector<std::vector<std::uint64_t>> parts(std::size_t{1} << split);
    auto run_part = [&](std::size_t p) {
        detail::KeepSearch s = base;
        std::vector<std::size_t> trail;
        for (std::size_t i = 0; i < split; ++i) {
            bool v = (p >> (split - 1 - i)) & 1;
            if (!s.assign(i, v, trail) || !s.propagate(trail, trail.size() - 1)) return;
        }
        s.dfs(trail);
        parts[p] = std::move(s.solutions);
    };
    if (threads > 1 && split > 0) {
        std::vector<std::future<void>> jobs;
        for (std::size_t p = 0; p < parts.size(); ++p)
            jobs.push_back(std::async(std::launch::async, run_part, p));
        for (auto& j : jobs) j.get();
    } else {
        for (std::size_t p = 0; p < parts.size(); ++p) run_part(p);
    }

    std::vector<std::uint64_t> sols;
    for (auto& p : parts) sols.insert(sols.end(), p.begin(), p.end());

    auto to_table = [&](std::uint64_t m) {
        std::vector<std::uint8_t> t(flags);
        for (std::size_t i = 0; i < flags; ++i) t[i] = (m >> i) & 1;
        return t;
    };

    ModificationList out;
    out.raw_total = sols.size();
    if (!up_to_aut) {
        for (auto m : sols) out.mods.push_back({g, to_table(m)});
        out.orbit_sizes.assign(out.mods.size(), 1);
    } else {
        auto actions = detail::flag_actions(g, view);
        std::map<std::vector<std::uint8_t>, std::size_t> reps;  // canonical -> raw count
        for (auto m : sols) {
            auto table = to_table(m);
            auto best = table;
            for (const auto& a : actions) best = std::min(best, detail::apply_flag_action(table, a));
            ++reps[best];
        }
        for (const auto& [canon, cnt] : reps) {
            std::set<std::vector<std::uint8_t>> orbit;
            for (const auto& a : actions) orbit.insert(detail::apply_flag_action(canon, a));
            if (orbit.size() != cnt)
                throw internal_error("modification enumeration is not closed under automorphisms");
            out.mods.push_back({g, canon});
            out.orbit_sizes.push_back(cnt);
        }
    }
    out.total = out.mods.size();
    for (const auto& m : out.mods) {
        auto c = is_modification(g, m.keep);
        if (!c.ok) throw internal_error("enumerated table fails the associativity recheck");
        if (std::find(m.keep.begin(), m.keep.end(), std::uint8_t{0}) != m.keep.end())
            ++out.proper;
    }
    return out;
}

struct UnitsResult {
    std::vector<std::size_t> members;  // ascending element indices, identity included
    bool contains(std::size_t idx) const {
        return std::binary_search(members.begin(), members.end(), idx);
    }
};

// Invertible elements: x with both x*x^{-1} and x^{-1}*x surviving.  Closure
// and the "units never annihilate" law follow from associativity; both are
// re-checked as hard assertions.
inline UnitsResult units(const Modification& s) {
    auto view = detail::group_view(s.group);
    UnitsResult u;
    for (std::size_t i = 0; i < s.group.size(); ++i) {
        std::size_t j = view.inv[i];
        if (detail::kept(s.keep, view, i, j) && detail::kept(s.keep, view, j, i))
            u.members.push_back(i);
    }
    for (auto a : u.members)
        for (auto b : u.members)
            if (!detail::kept(s.keep, view, a, b) || !u.contains(s.group.product(a, b)))
                throw internal_error("unit set is not closed under the modification product");
    for (auto a : u.members)
        for (std::size_t x = 0; x < s.group.size(); ++x)
            if (!detail::kept(s.keep, view, a, x) || !detail::kept(s.keep, view, x, a))
                throw internal_error("unit times nonzero element vanished");
    return u;
}

struct IdealAnalysis {
    bool is_ideal = false;
    std::optional<std::size_t> nilpotency_index;
    std::vector<std::size_t> members;  // indices in the induced semigroup, zero included
};

inline IdealAnalysis nonunit_ideal_analysis(const Modification& s) {
    auto t = modification_semigroup(s);
    auto u = units(s);
    std::size_t zero = *t.zero;
    std::set<std::size_t> ideal;
    for (std::size_t i = 0; i < s.group.size(); ++i)
        if (!u.contains(i)) ideal.insert(i);
    ideal.insert(zero);
    IdealAnalysis out;
    out.members.assign(ideal.begin(), ideal.end());
    out.is_ideal = true;
    for (auto a : ideal)
        for (std::size_t x = 0; x < t.size() && out.is_ideal; ++x)
            if (!ideal.count(t.product(a, x)) || !ideal.count(t.product(x, a)))
                out.is_ideal = false;
    if (!out.is_ideal) return out;
    std::set<std::size_t> power = ideal;
    std::size_t k = 1;
    while (!(power.size() == 1 && *power.begin() == zero)) {
        if (k > t.size() + 1) return out;  // not nilpotent within the trivial bound
        std::set<std::size_t> next;
        for (auto a : power)
            for (auto b : ideal) next.insert(t.product(a, b));
        power = std::move(next);
        ++k;
    }
    out.nilpotency_index = k;
    return out;
}

struct CancellationCheck {
    bool ok = true;
    std::string message;
    std::array<std::string, 3> witness{};
};

// x*z = y*z != 0 forces x = y, and the left-sided mirror.  Takes a raw table
// so that deliberately broken inputs can be diagnosed too.
inline CancellationCheck check_weak_cancellation_table(const std::vector<std::string>& names,
                                                       const std::vector<std::size_t>& table,
                                                       std::size_t zero) {
    std::size_t n = names.size();
    if (table.size() != n * n || zero >= n)
        throw invalid_input("weak cancellation check needs an n*n table and a zero index");
    auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (at(x, z) == at(y, z) && at(x, z) != zero)
                    return {false, "right cancellation fails", {names[x], names[y], names[z]}};
                if (at(z, x) == at(z, y) && at(z, x) != zero)
                    return {false, "left cancellation fails", {names[x], names[y], names[z]}};
            }
        }
    return {};
}

inline CancellationCheck check_weak_cancellation(const Modification& s) {
    auto t = modification_semigroup(s);
    return check_weak_cancellation_table(t.elements, t.table, *t.zero);
}

inline void require_same_group(const Modification& a, const Modification& b) {
    if (a.group.elements != b.group.elements || a.group.table != b.group.table)
        throw invalid_input("modifications live over different groups");
}

// a precedes b when every product surviving in a survives in b, i.e. b's zero
// set is contained in a's.
inline bool prec(const Modification& a, const Modification& b) {
    require_same_group(a, b);
    for (std::size_t i = 0; i < a.keep.size(); ++i)
        if (a.keep[i] && !b.keep[i]) return false;
    return true;
}

inline Modification meet(const Modification& a, const Modification& b) {
    require_same_group(a, b);
    std::vector<std::uint8_t> keep(a.keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = a.keep[i] && b.keep[i];
    auto c = is_modification(a.group, keep);
    if (!c.ok)
        throw internal_error("meet of two modifications is not associative at (" + c.witness[0] +
                             ", " + c.witness[1] + ", " + c.witness[2] + ")");
    return {a.group, std::move(keep)};
}

inline bool normal_units(const Modification& s) {
    auto t = modification_semigroup(s);
    auto u = units(s);
    for (std::size_t x = 0; x < t.size(); ++x) {
        std::set<std::size_t> left, right;
        for (auto m : u.members) {
            left.insert(t.product(x, m));
            right.insert(t.product(m, x));
        }
        if (left != right) return false;
    }
    return true;
}

// Classes are unit cosets plus the zero class; the class product is read off
// representatives and re-checked exhaustively.
inline FiniteSemigroup quotient_by_units(const Modification& s) {
    if (!normal_units(s)) throw invalid_input("unit subgroup is not normal in the modification");
    auto t = modification_semigroup(s);
    auto u = units(s);
    std::size_t n = s.group.size(), zero = n;
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cls(n + 1, npos);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < n; ++x) {
        if (cls[x] != npos) continue;
        std::size_t c = reps.size();
        reps.push_back(x);
        for (auto m : u.members) {
            std::size_t y = t.product(m, x);
            if (y == zero) throw internal_error("unit coset reached zero");
            if (cls[y] == npos)
                cls[y] = c;
            else if (cls[y] != c)
                throw internal_error("unit cosets are not disjoint");
        }
    }
    cls[zero] = reps.size();
    std::size_t q = reps.size() + 1;
    std::vector<std::size_t> table(q * q, q - 1);
    for (std::size_t c1 = 0; c1 + 1 < q; ++c1)
        for (std::size_t c2 = 0; c2 + 1 < q; ++c2)
            table[c1 * q + c2] = cls[t.product(reps[c1], reps[c2])];
    for (std::size_t x = 0; x <= n; ++x)
        for (std::size_t y = 0; y <= n; ++y)
            if (cls[t.product(x, y)] != table[cls[x] * q + cls[y]])
                throw internal_error("quotient by units is ill-defined");
    FiniteSemigroup out;
    for (auto r : reps) out.elements.push_back(t.elements[r]);
    out.elements.push_back(fresh_name(out, "0"));
    out.table = std::move(table);
    out.zero = q - 1;
    return checked_semigroup(std::move(out));
}

}  // namespace semicoh
