#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "coeff_module.hpp"

namespace semicoh {

struct CohomologyResult {
    std::size_t degree = 0;
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;
    // Tuple counts indexing C^(n-1), C^n, C^(n+1); degree 0 counts as one
    // block (C^0 = A) and C^(-1) as zero.
    std::vector<std::size_t> cochain_sizes;

    bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
};

// Direct sum of `blocks` copies of the canonical coefficient group.
inline PresentedAbelianGroup cochain_group(const CanonModule& a, std::size_t blocks) {
    std::vector<Int> mods(blocks * a.gens);
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < a.gens; ++i) mods[b * a.gens + i] = a.moduli[i];
    return pag_from_moduli(mods);
}

namespace detail {

inline std::size_t blocks_at(const std::vector<TupleSet>& levels, std::size_t k) {
    return k == 0 ? 1 : levels[k].size();
}

// Column block index of a degree-k tuple; the empty tuple is block 0.
inline std::size_t tuple_block(const std::vector<TupleSet>& levels,
                               const std::vector<std::size_t>& t) {
    if (t.empty()) return 0;
    auto idx = levels[t.size()].index_of(t);
    if (!idx) throw internal_error("referenced tuple missing from its tuple set");
    return *idx;
}

// Raw matrix of the degree-k coboundary in canonical coordinates, block
// layout coord = block * gens + gen. Entries are balanced-reduced mod m when
// m > 0 (sound for the congruence-kernel and boundary-image uses below).
inline IntMatrix assemble_coboundary(const Root& w, const std::vector<TupleSet>& levels,
                                     std::size_t k, const CanonModule& a, const Int& m,
                                     const std::vector<IntMatrix>& act_by_index) {
    const std::size_t g = a.gens;
    const std::size_t rows = blocks_at(levels, k + 1) * g;
    const std::size_t cols = blocks_at(levels, k) * g;
    IntMatrix out(rows, cols);
    auto add_block = [&](std::size_t rb, std::size_t cb, const IntMatrix& mat, int sign) {
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) {
                Int& e = out(rb * g + i, cb * g + j);
                e += sign > 0 ? mat(i, j) : -mat(i, j);
                if (m > 0) e = balanced_mod(e, m);
            }
    };
    const IntMatrix id = IntMatrix::identity(g);
    const std::size_t nrows = blocks_at(levels, k + 1);
    for (std::size_t r = 0; r < nrows; ++r) {
        const auto& t = levels[k + 1].tuples[r];
        std::vector<std::size_t> border(t.begin() + 1, t.end());
        add_block(r, tuple_block(levels, border), act_by_index[t[0]], +1);
        std::vector<std::size_t> merged(t.size() - 1);
        for (std::size_t j = 0; j + 1 < t.size(); ++j) {
            for (std::size_t q = 0, p = 0; q < t.size(); ++q) {
                if (q == j) {
                    merged[p++] = w.product(t[j], t[j + 1]);
                    ++q;  // skip t[j+1]
                } else {
                    merged[p++] = t[q];
                }
            }
            add_block(r, tuple_block(levels, merged), id, (j % 2 == 0) ? -1 : +1);
        }
        border.assign(t.begin(), t.end() - 1);
        // Last term carries (-1)^(k+1) and the row tuple has k+1 entries.
        add_block(r, tuple_block(levels, border), id, (t.size() % 2 == 0) ? +1 : -1);
    }
    return out;
}

inline std::vector<IntMatrix> actions_by_index(const Root& w, const CanonModule& a) {
    std::vector<IntMatrix> act;
    act.reserve(w.size());
    for (const auto& name : w.elements) act.push_back(a.action(name));
    return act;
}

// Assert d_out * d_in vanishes coordinatewise modulo the coefficient moduli.
inline void check_complex(const IntMatrix& d_out, const IntMatrix& d_in, const CanonModule& a) {
    IntMatrix comp = d_out * d_in;
    for (std::size_t i = 0; i < comp.rows(); ++i) {
        const Int& mi = a.moduli[i % a.gens];
        for (std::size_t j = 0; j < comp.cols(); ++j) {
            Int e = comp(i, j);
            if (mi != 0) e %= mi;
            if (e != 0) throw internal_error("coboundary composite is nonzero");
        }
    }
}

// Homology of the coordinate-level pair (d_in, d_out) over the canonical
// module. Dispatches to a uniform-modulus congruence-kernel path (no row
// transforms on the large side) or the exact generic path.
inline InvariantFactors homology_from_raw(const IntMatrix& d_in, IntMatrix d_out,
                                          const CanonModule& a) {
    const std::size_t g_mid = d_out.cols();
    if (g_mid == 0) return {};
    if (a.uniform && a.m >= 2) {
        const Int& m = a.m;
        auto ker = congruence_kernel(std::move(d_out), m);
        // Cocycle lattice K = V * diag(step); columns of d_in lie in K.
        IntMatrix y = ker.vinv * d_in;
        for (std::size_t i = 0; i < g_mid; ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) {
                if (y(i, j) % ker.step[i] != 0)
                    throw internal_error("boundary outside cocycle lattice");
                y(i, j) = balanced_mod(y(i, j) / ker.step[i], m);
            }
        // Coordinates of m*Z^g_mid: these columns span at least m*(K-coords),
        // which is what makes the mod-m reduction of y above harmless.
        IntMatrix w(g_mid, g_mid);
        for (std::size_t i = 0; i < g_mid; ++i) {
            Int scale = m / ker.step[i];
            for (std::size_t j = 0; j < g_mid; ++j) w(i, j) = scale * ker.vinv(i, j);
        }
        return invariant_factors(PresentedAbelianGroup(g_mid, hconcat(y, w)));
    }
    if (a.uniform && a.m == 0) {
        auto ker = congruence_kernel(std::move(d_out), Int(0));
        std::vector<std::size_t> null_pos;
        for (std::size_t i = 0; i < g_mid; ++i)
            if (ker.diag[i] == 0) null_pos.push_back(i);
        IntMatrix y = ker.vinv * d_in;
        for (std::size_t i = 0; i < g_mid; ++i) {
            if (ker.diag[i] == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                if (y(i, j) != 0) throw internal_error("boundary outside exact kernel");
        }
        return invariant_factors(PresentedAbelianGroup(null_pos.size(), y.select_rows(null_pos)));
    }
    // Mixed moduli: exact three-term homology over the block-diagonal groups.
    std::size_t blocks_mid = g_mid / a.gens;
    std::size_t blocks_in = a.gens ? d_in.cols() / a.gens : 0;
    std::size_t blocks_out = a.gens ? d_out.rows() / a.gens : 0;
    PresentedAbelianGroup cin = cochain_group(a, blocks_in);
    PresentedAbelianGroup cmid = cochain_group(a, blocks_mid);
    PresentedAbelianGroup cout = cochain_group(a, blocks_out);
    GroupHom din{std::move(cin), cmid, d_in};
    GroupHom dout{cmid, std::move(cout), std::move(d_out)};
    return invariant_factors(complex_homology(din, dout));
}

inline CohomologyResult result_from_factors(std::size_t n, InvariantFactors f,
                                            std::vector<std::size_t> sizes) {
    CohomologyResult r;
    r.degree = n;
    r.invariant_factors = std::move(f.factors);
    r.free_rank = f.free_rank;
    r.cochain_sizes = std::move(sizes);
    return r;
}

inline CohomologyResult cohomology_from_root(const Root& w, const CanonModule& a,
                                             std::size_t n, std::size_t cap) {
    auto levels = wn_tuples_upto(w, n + 1, cap);
    std::vector<std::size_t> sizes{n == 0 ? 0 : blocks_at(levels, n - 1),
                                   blocks_at(levels, n), blocks_at(levels, n + 1)};
    if (a.gens == 0 || blocks_at(levels, n) == 0)
        return result_from_factors(n, {}, std::move(sizes));
    if (blocks_at(levels, n + 1) * a.gens > 4000000)
        throw bound_exceeded("coboundary matrix too large");
    auto act = actions_by_index(w, a);
    const Int reduce = (a.uniform && a.m >= 2) ? a.m : Int(0);
    IntMatrix d_out = assemble_coboundary(w, levels, n, a, reduce, act);
    IntMatrix d_in = n == 0 ? IntMatrix(blocks_at(levels, 0) * a.gens, 0)
                            : assemble_coboundary(w, levels, n - 1, a, reduce, act);
    if (n > 0) check_complex(d_out, d_in, a);
    return result_from_factors(n, homology_from_raw(d_in, std::move(d_out), a),
                               std::move(sizes));
}

}  // namespace detail

inline CohomologyResult partial_cohomology(const Root& w, const CoefficientModule& a,
                                           std::size_t n,
                                           std::size_t cap = default_tuple_cap) {
    if (a.kind != ModuleKind::root)
        throw invalid_input("partial cohomology needs a root-kind module");
    auto v = validate_module(a, w);
    if (!v.ok) throw invalid_input(v.message);
    return detail::cohomology_from_root(w, canonical_module(a), n, cap);
}

inline CohomologyResult em_cohomology(const FiniteSemigroup& s, const CoefficientModule& a,
                                      std::size_t n, std::size_t cap = default_tuple_cap) {
    if (a.kind != ModuleKind::em) throw invalid_input("em cohomology needs an em-kind module");
    auto v = validate_module(a, s);
    if (!v.ok) throw invalid_input(v.message);
    return detail::cohomology_from_root(root_total(s), canonical_module(a), n, cap);
}

namespace detail {

// Tuple sets of the zero-kind complex built straight from the semigroup
// table: k-tuples over S minus its zero whose full product is nonzero,
// extended prefix-first. Independent of the root DP used by wn_tuples.
inline std::vector<TupleSet> nonzero_tuples_upto(const FiniteSemigroup& s, std::size_t n,
                                                 std::size_t cap) {
    std::size_t z = *s.zero;
    std::vector<std::size_t> carrier;  // root-style indices skipping the zero
    std::vector<std::size_t> to_sub(s.size(), Root::undef);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != z) {
            to_sub[i] = carrier.size();
            carrier.push_back(i);
        }
    std::vector<TupleSet> levels(n + 1);
    levels[1].degree = 1;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        levels[1].tuples.push_back({i});
        levels[1].value.push_back(i);  // value in carrier indexing
    }
    for (std::size_t k = 2; k <= n; ++k) {
        levels[k].degree = k;
        for (std::size_t r = 0; r < levels[k - 1].size(); ++r)
            for (std::size_t x = 0; x < carrier.size(); ++x) {
                std::size_t p = s.product(carrier[levels[k - 1].value[r]], carrier[x]);
                if (p == z) continue;
                if (levels[k].tuples.size() >= cap)
                    throw bound_exceeded("nonzero tuple set exceeds cap");
                auto t = levels[k - 1].tuples[r];
                t.push_back(x);
                levels[k].tuples.push_back(std::move(t));
                levels[k].value.push_back(to_sub[p]);
            }
    }
    return levels;
}

inline CohomologyResult zero_cohomology_direct(const FiniteSemigroup& s,
                                               const CoefficientModule& a, std::size_t n,
                                               std::size_t cap) {
    CanonModule canon = canonical_module(a);
    auto levels = nonzero_tuples_upto(s, n + 1, cap);
    std::vector<std::size_t> sizes{n == 0 ? 0 : blocks_at(levels, n - 1),
                                   blocks_at(levels, n), blocks_at(levels, n + 1)};
    if (canon.gens == 0 || blocks_at(levels, n) == 0)
        return result_from_factors(n, {}, std::move(sizes));
    // The carrier acts like a root whose product is the nonzero part of the
    // table; build that view only to reuse the assembly formula.
    Root view = root_from_zero_semigroup(s);
    auto act = actions_by_index(view, canon);
    const Int reduce = (canon.uniform && canon.m >= 2) ? canon.m : Int(0);
    IntMatrix d_out = assemble_coboundary(view, levels, n, canon, reduce, act);
    IntMatrix d_in = n == 0 ? IntMatrix(blocks_at(levels, 0) * canon.gens, 0)
                            : assemble_coboundary(view, levels, n - 1, canon, reduce, act);
    if (n > 0) check_complex(d_out, d_in, canon);
    return result_from_factors(n, homology_from_raw(d_in, std::move(d_out), canon),
                               std::move(sizes));
}

}  // namespace detail

// Computed twice: once from the section-2 definition (nonzero tuples over
// the semigroup table) and once as partial cohomology of the induced root;
// the two must agree.
inline CohomologyResult zero_cohomology(const FiniteSemigroup& s, const CoefficientModule& a,
                                        std::size_t n, std::size_t cap = default_tuple_cap) {
    if (a.kind != ModuleKind::zero)
        throw invalid_input("zero cohomology needs a zero-kind module");
    auto v = validate_module(a, s);
    if (!v.ok) throw invalid_input(v.message);
    CohomologyResult direct = detail::zero_cohomology_direct(s, a, n, cap);
    Root w = root_from_zero_semigroup(s);
    CoefficientModule rooted = restrict_to_root(a, w);
    CohomologyResult via_root = partial_cohomology(w, rooted, n, cap);
    if (direct.invariant_factors != via_root.invariant_factors ||
        direct.free_rank != via_root.free_rank)
        throw internal_error("zero-cohomology paths disagree");
    return direct;
}

struct ThetaResult {
    std::size_t degree = 0;
    InducedMap induced;
};

// Restriction of EM cochains of S to the cochains of an embedded total root.
// Accepts exactly the roots that demonstrably present S: same element set,
// all products defined and matching the table.
inline ThetaResult theta_map(const FiniteSemigroup& s, const Root& w,
                             const CoefficientModule& a, std::size_t n,
                             std::size_t cap = default_tuple_cap) {
    if (a.kind != ModuleKind::em) throw invalid_input("theta needs an em-kind module");
    auto mv = validate_module(a, s);
    if (!mv.ok) throw invalid_input(mv.message);
    std::vector<std::size_t> to_s(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto idx = s.index_of(w.elements[i]);
        if (!idx)
            throw invalid_input("root not embeddable: element " + w.elements[i] +
                                " missing from the semigroup");
        to_s[i] = *idx;
    }
    if (w.size() < s.size())
        throw invalid_input("root does not generate the semigroup: tuple values never reach " +
                            std::to_string(s.size() - w.size()) + " element(s)");
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (!w.defined(i, j))
                throw invalid_input("root products do not close: (" + w.elements[i] + ", " +
                                    w.elements[j] + ") undefined but multiplies in the semigroup");
            if (to_s[w.product(i, j)] != s.product(to_s[i], to_s[j]))
                throw invalid_input("root product inconsistent with the table at (" +
                                    w.elements[i] + ", " + w.elements[j] + ")");
        }

    CanonModule canon = canonical_module(a);
    Root ws = root_total(s);
    auto levels_s = wn_tuples_upto(ws, n + 1, cap);
    auto levels_w = wn_tuples_upto(w, n + 1, cap);
    auto act_s = detail::actions_by_index(ws, canon);
    auto act_w = detail::actions_by_index(w, canon);

    auto complex_at = [&](const Root& r, const std::vector<TupleSet>& levels,
                          const std::vector<IntMatrix>& act, GroupHom& d_in, GroupHom& d_out) {
        std::size_t bi = n == 0 ? 0 : detail::blocks_at(levels, n - 1);
        std::size_t bm = detail::blocks_at(levels, n);
        std::size_t bo = detail::blocks_at(levels, n + 1);
        PresentedAbelianGroup cin = n == 0 ? pag_trivial() : cochain_group(canon, bi);
        PresentedAbelianGroup cmid = cochain_group(canon, bm);
        PresentedAbelianGroup cout = cochain_group(canon, bo);
        IntMatrix min = n == 0 ? IntMatrix(bm * canon.gens, 0)
                               : detail::assemble_coboundary(r, levels, n - 1, canon, 0, act);
        IntMatrix mout = detail::assemble_coboundary(r, levels, n, canon, 0, act);
        d_in = GroupHom{std::move(cin), cmid, std::move(min)};
        d_out = GroupHom{cmid, std::move(cout), std::move(mout)};
    };
    GroupHom s_in, s_out, w_in, w_out;
    complex_at(ws, levels_s, act_s, s_in, s_out);
    complex_at(w, levels_w, act_w, w_in, w_out);

    const std::size_t g = canon.gens;
    IntMatrix f(detail::blocks_at(levels_w, n) * g, detail::blocks_at(levels_s, n) * g);
    if (n == 0) {
        for (std::size_t i = 0; i < g; ++i) f(i, i) = 1;
    } else {
        for (std::size_t j = 0; j < levels_w[n].size(); ++j) {
            std::vector<std::size_t> mapped(n);
            for (std::size_t q = 0; q < n; ++q) mapped[q] = to_s[levels_w[n].tuples[j][q]];
            auto idx = levels_s[n].index_of(mapped);
            if (!idx) throw internal_error("mapped tuple missing from the total complex");
            for (std::size_t i = 0; i < g; ++i) f(j * g + i, *idx * g + i) = 1;
        }
    }
    GroupHom chain{s_out.dom, w_out.dom, std::move(f)};
    ThetaResult out;
    out.degree = n;
    out.induced = induced_map_on_homology(chain, s_in, s_out, w_in, w_out);
    return out;
}

struct BruteForceResult {
    Int order = 1;
    Int exponent = 1;
};

// Independent oracle: counts cocycles and materializes coboundaries by
// exhaustive enumeration, evaluating the coboundary formula tuple by tuple
// in 64-bit arithmetic. Never touches Smith normal form.
inline BruteForceResult brute_force_cohomology(const Root& w, const CoefficientModule& a,
                                               std::size_t n,
                                               std::uint64_t set_bound = std::uint64_t(1) << 20,
                                               std::size_t cap = default_tuple_cap) {
    CanonModule canon = canonical_module(a);
    for (const auto& m : canon.moduli)
        if (m == 0) throw invalid_input("brute force needs finite coefficients");
    if (canon.gens == 0) return {};
    auto levels = wn_tuples_upto(w, n + 1, cap);
    const std::size_t g = canon.gens;
    const std::size_t coords_mid = detail::blocks_at(levels, n) * g;
    const std::size_t coords_in = (n == 0) ? 0 : detail::blocks_at(levels, n - 1) * g;
    std::vector<std::int64_t> mods_mid(coords_mid), mods_in(coords_in);
    for (std::size_t i = 0; i < coords_mid; ++i)
        mods_mid[i] = static_cast<std::int64_t>(canon.moduli[i % g]);
    for (std::size_t i = 0; i < coords_in; ++i)
        mods_in[i] = static_cast<std::int64_t>(canon.moduli[i % g]);
    auto count_of = [&](const std::vector<std::int64_t>& mods) {
        double c = 1;
        for (auto m : mods) c *= static_cast<double>(m);
        return c;
    };
    if (count_of(mods_mid) > static_cast<double>(set_bound) ||
        count_of(mods_in) > static_cast<double>(set_bound))
        throw bound_exceeded("cochain set too large for brute force");

    std::vector<std::vector<std::int64_t>> act(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const IntMatrix& m = canon.action(w.elements[i]);
        act[i].resize(g * g);
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = 0; c < g; ++c)
                act[i][r * g + c] =
                    static_cast<std::int64_t>(pos_mod(m(r, c), canon.moduli[r % g]));
    }

    // Evaluate the degree-k coboundary of the cochain `f` on tuple t.
    auto eval = [&](const std::vector<std::int64_t>& f, std::size_t k,
                    const std::vector<std::size_t>& t, std::int64_t* out_block) {
        for (std::size_t i = 0; i < g; ++i) out_block[i] = 0;
        auto block_of = [&](const std::vector<std::size_t>& sub) {
            return detail::tuple_block(levels, sub);
        };
        std::vector<std::size_t> border(t.begin() + 1, t.end());
        {
            std::size_t cb = block_of(border);
            const auto& m = act[t[0]];
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = 0; j < g; ++j)
                    out_block[i] += m[i * g + j] * f[cb * g + j];
        }
        std::vector<std::size_t> merged(t.size() - 1);
        for (std::size_t j = 0; j + 1 < t.size(); ++j) {
            for (std::size_t q = 0, p = 0; q < t.size(); ++q) {
                if (q == j) {
                    merged[p++] = w.product(t[j], t[j + 1]);
                    ++q;
                } else {
                    merged[p++] = t[q];
                }
            }
            std::size_t cb = block_of(merged);
            int sign = (j % 2 == 0) ? -1 : +1;
            for (std::size_t i = 0; i < g; ++i) out_block[i] += sign * f[cb * g + i];
        }
        border.assign(t.begin(), t.end() - 1);
        {
            std::size_t cb = block_of(border);
            int sign = (t.size() % 2 == 0) ? +1 : -1;
            for (std::size_t i = 0; i < g; ++i) out_block[i] += sign * f[cb * g + i];
        }
    };

    if (canon.moduli.back() > 65535) throw bound_exceeded("coefficient modulus too large to pack");
    auto pack = [&](const std::vector<std::int64_t>& v) {
        std::string s(v.size() * 2, '\0');
        for (std::size_t i = 0; i < v.size(); ++i) {
            s[2 * i] = static_cast<char>(v[i] & 0xff);
            s[2 * i + 1] = static_cast<char>((v[i] >> 8) & 0xff);
        }
        return s;
    };

    // Coboundary image in C^n as a set; for degree 0 it is just {0}.
    std::unordered_set<std::string> image;
    if (n == 0) {
        image.insert(pack(std::vector<std::int64_t>(coords_mid, 0)));
    } else {
        std::vector<std::int64_t> gvec(coords_in, 0);
        std::vector<std::int64_t> bd(coords_mid);
        std::vector<std::int64_t> blockv(g);
        bool done = false;
        while (!done) {
            for (std::size_t b = 0; b < detail::blocks_at(levels, n); ++b) {
                eval(gvec, n - 1, levels[n].tuples[b], blockv.data());
                for (std::size_t i = 0; i < g; ++i)
                    bd[b * g + i] = ((blockv[i] % mods_mid[b * g + i]) + mods_mid[b * g + i]) %
                                    mods_mid[b * g + i];
            }
            image.insert(pack(bd));
            done = true;
            for (std::size_t i = 0; i < coords_in; ++i) {
                if (++gvec[i] < mods_in[i]) {
                    done = false;
                    break;
                }
                gvec[i] = 0;
            }
        }
    }

    // Divisors of the coefficient exponent, ascending: coset orders divide it.
    std::int64_t exp_a = static_cast<std::int64_t>(canon.moduli.back());
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= exp_a; ++d)
        if (exp_a % d == 0) divisors.push_back(d);

    Int z_count = 0;
    std::int64_t exponent = 1;
    {
        std::vector<std::int64_t> f(coords_mid, 0);
        std::vector<std::int64_t> blockv(g);
        std::vector<std::int64_t> scaled(coords_mid);
        bool done = false;
        while (!done) {
            bool cocycle = true;
            for (std::size_t b = 0; cocycle && b < levels[n + 1].size(); ++b) {
                eval(f, n, levels[n + 1].tuples[b], blockv.data());
                for (std::size_t i = 0; i < g; ++i)
                    if (blockv[i] % static_cast<std::int64_t>(canon.moduli[i]) != 0) {
                        cocycle = false;
                        break;
                    }
            }
            if (cocycle) {
                ++z_count;
                for (auto d : divisors) {
                    for (std::size_t i = 0; i < coords_mid; ++i)
                        scaled[i] = (f[i] * d) % mods_mid[i];
                    if (image.count(pack(scaled))) {
                        exponent = std::max(exponent, d);
                        break;
                    }
                }
            }
            done = true;
            for (std::size_t i = 0; i < coords_mid; ++i) {
                if (++f[i] < mods_mid[i]) {
                    done = false;
                    break;
                }
                f[i] = 0;
            }
        }
    }
    BruteForceResult out;
    Int b_count = Int(static_cast<long long>(image.size()));
    if (z_count % b_count != 0) throw internal_error("cocycle count not divisible by boundaries");
    out.order = z_count / b_count;
    out.exponent = exponent;
    return out;
}

}  // namespace semicoh
