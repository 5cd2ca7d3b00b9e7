#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smith.hpp"

namespace semicoh {

// Z^gens / (integer column span of relations). Columns of `relations` are
// relators; the matrix always has `gens` rows.
struct PresentedAbelianGroup {
    std::size_t gens = 0;
    IntMatrix relations;  // gens x r

    PresentedAbelianGroup() : relations(0, 0) {}
    PresentedAbelianGroup(std::size_t g, IntMatrix rel) : gens(g), relations(std::move(rel)) {
        if (relations.rows() != gens) throw invalid_input("relation matrix must have gens rows");
    }
};

inline PresentedAbelianGroup pag_free(std::size_t g) {
    return {g, IntMatrix(g, 0)};
}

inline PresentedAbelianGroup pag_cyclic(const Int& n) {
    return {1, IntMatrix{{n}}};
}

// One generator per modulus; modulus 0 means a free coordinate.
inline PresentedAbelianGroup pag_from_moduli(const std::vector<Int>& moduli) {
    return {moduli.size(), diagonal_matrix(moduli)};
}

inline PresentedAbelianGroup pag_trivial() { return pag_free(0); }

struct InvariantFactors {
    std::vector<Int> factors;  // divisibility chain, every entry >= 2
    std::size_t free_rank = 0;

    bool trivial() const { return factors.empty() && free_rank == 0; }
    bool operator==(const InvariantFactors& o) const = default;
};

inline InvariantFactors invariant_factors(const PresentedAbelianGroup& g) {
    auto s = detail::smith_core(g.relations, false, false, false, false, Int(0), true);
    InvariantFactors f;
    for (const auto& d : s.diag)
        if (d >= 2) f.factors.push_back(d);
    f.free_rank = g.gens - s.rank;
    return f;
}

inline bool group_trivial(const PresentedAbelianGroup& g) {
    return invariant_factors(g).trivial();
}

inline std::optional<Int> group_order(const PresentedAbelianGroup& g) {
    auto f = invariant_factors(g);
    if (f.free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const auto& d : f.factors) n *= d;
    return n;
}

inline std::optional<Int> group_exponent(const PresentedAbelianGroup& g) {
    auto f = invariant_factors(g);
    if (f.free_rank > 0) return std::nullopt;
    return f.factors.empty() ? Int(1) : f.factors.back();
}

// Matrix is codomain-generators x domain-generators, acting on coordinate columns.
struct GroupHom {
    PresentedAbelianGroup dom, cod;
    IntMatrix mat;
};

inline GroupHom zero_hom(PresentedAbelianGroup dom, PresentedAbelianGroup cod) {
    IntMatrix m(cod.gens, dom.gens);
    return {std::move(dom), std::move(cod), std::move(m)};
}

inline GroupHom identity_hom(PresentedAbelianGroup g) {
    IntMatrix m = IntMatrix::identity(g.gens);
    return {g, std::move(g), std::move(m)};
}

struct HomCheck {
    bool ok = true;
    std::size_t bad_relator = 0;  // index into domain relations when !ok
};

// Well-defined iff matrix maps every domain relator into the codomain
// relation lattice.
inline HomCheck hom_validate(const GroupHom& f) {
    if (f.mat.rows() != f.cod.gens || f.mat.cols() != f.dom.gens)
        throw invalid_input("hom matrix dimensions do not match generator counts");
    ColumnSpanSolver cod_span(f.cod.relations);
    IntMatrix image = f.mat * f.dom.relations;
    for (std::size_t j = 0; j < image.cols(); ++j)
        if (!cod_span.contains(image.column(j))) return {false, j};
    return {};
}

inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (g.mat.cols() != f.mat.rows()) throw invalid_input("hom composition shape mismatch");
    return {f.dom, g.cod, g.mat * f.mat};
}

inline bool homs_equal(const GroupHom& f, const GroupHom& g) {
    if (f.mat.rows() != g.mat.rows() || f.mat.cols() != g.mat.cols()) return false;
    ColumnSpanSolver cod_span(f.cod.relations);
    IntMatrix d = f.mat - g.mat;
    for (std::size_t j = 0; j < d.cols(); ++j)
        if (!cod_span.contains(d.column(j))) return false;
    return true;
}

// Coordinate change onto the invariant-factor form. Coordinates with unit
// modulus are dropped; remaining moduli are >= 2 or 0 (free).
struct CanonicalForm {
    std::vector<Int> moduli;
    IntMatrix to_canon;    // kept x gens
    IntMatrix from_canon;  // gens x kept
};

inline CanonicalForm canonicalize(const PresentedAbelianGroup& g) {
    auto w = detail::smith_core(g.relations, true, true, false, false, Int(0), true);
    std::vector<Int> full(g.gens, Int(0));
    for (std::size_t i = 0; i < w.diag.size(); ++i) full[i] = w.diag[i];
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < g.gens; ++i)
        if (full[i] != 1) kept.push_back(i);
    CanonicalForm c;
    for (auto i : kept) c.moduli.push_back(full[i]);
    c.to_canon = w.u->select_rows(kept);
    c.from_canon = w.uinv->select_cols(kept);
    return c;
}

// A sublattice quotient P/Q presented on a basis of the lattice spanned by
// the columns of P. Q's columns must lie in that lattice.
struct Subquotient {
    PresentedAbelianGroup group;
    IntMatrix embedding;  // ambient-coords x group.gens, basis of the P lattice
    IntMatrix coord_u;    // SNF data of P for coordinate extraction
    std::vector<Int> coord_diag;
    std::size_t coord_rank = 0;

    // Coordinates of an ambient vector known to lie in the P lattice.
    std::vector<Int> coords_of(const std::vector<Int>& w) const {
        std::vector<Int> c = coord_u.apply(w);
        std::vector<Int> y(coord_rank);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < coord_rank) {
                if (c[i] % coord_diag[i] != 0)
                    throw internal_error("vector outside lattice: bad divisibility");
                y[i] = c[i] / coord_diag[i];
            } else if (c[i] != 0) {
                throw internal_error("vector outside lattice: nonzero tail");
            }
        }
        return y;
    }
};

inline Subquotient subquotient(const IntMatrix& p, const IntMatrix& q) {
    if (p.rows() != q.rows()) throw internal_error("subquotient ambient mismatch");
    auto w = detail::smith_core(p, true, true, false, false, Int(0), true);
    Subquotient s;
    s.coord_u = std::move(*w.u);
    s.coord_diag = std::move(w.diag);
    s.coord_rank = w.rank;
    s.embedding = IntMatrix(p.rows(), w.rank);
    for (std::size_t j = 0; j < w.rank; ++j)
        for (std::size_t i = 0; i < p.rows(); ++i)
            s.embedding(i, j) = (*w.uinv)(i, j) * s.coord_diag[j];
    IntMatrix rel(w.rank, q.cols());
    for (std::size_t j = 0; j < q.cols(); ++j) {
        auto y = s.coords_of(q.column(j));
        for (std::size_t i = 0; i < w.rank; ++i) rel(i, j) = y[i];
    }
    s.group = PresentedAbelianGroup(w.rank, std::move(rel));
    return s;
}

// Integer generators of {x : f(x) lies in the relation lattice of f.cod},
// i.e. the cocycle lattice of f inside Z^{f.dom.gens}.
inline IntMatrix preimage_lattice(const IntMatrix& mat, const IntMatrix& cod_relations) {
    IntMatrix n = hconcat(mat, cod_relations);
    auto ker = congruence_kernel(n, Int(0));
    std::vector<std::size_t> null_cols;
    for (std::size_t j = 0; j < n.cols(); ++j)
        if (ker.diag[j] == 0) null_cols.push_back(j);
    return ker.v.select_cols(null_cols).top_rows(mat.cols());
}

struct HomologyData {
    PresentedAbelianGroup group;
    IntMatrix kernel_gens;  // middle-gens x k, lattice generators of ker(d_out)
    Subquotient sub;        // group/embedding/coords live here
};

inline void require_same_presentation(const PresentedAbelianGroup& a,
                                      const PresentedAbelianGroup& b,
                                      const char* what) {
    if (a.gens != b.gens || !(a.relations == b.relations)) throw invalid_input(what);
}

inline HomologyData complex_homology_full(const GroupHom& d_in, const GroupHom& d_out) {
    require_same_presentation(d_in.cod, d_out.dom,
                              "complex_homology: middle groups do not match");
    if (!hom_validate(d_in).ok) throw invalid_input("complex_homology: d_in not well defined");
    if (!hom_validate(d_out).ok) throw invalid_input("complex_homology: d_out not well defined");
    ColumnSpanSolver out_span(d_out.cod.relations);
    IntMatrix comp = d_out.mat * d_in.mat;
    for (std::size_t j = 0; j < comp.cols(); ++j)
        if (!out_span.contains(comp.column(j)))
            throw invalid_input("complex_homology: composite-not-zero");

    HomologyData h;
    h.kernel_gens = preimage_lattice(d_out.mat, d_out.cod.relations);
    IntMatrix q = hconcat(d_in.mat, d_out.dom.relations);
    h.sub = subquotient(h.kernel_gens, q);
    h.group = h.sub.group;
    return h;
}

inline PresentedAbelianGroup complex_homology(const GroupHom& d_in, const GroupHom& d_out) {
    return complex_homology_full(d_in, d_out).group;
}

// Kernel of f as a subgroup of f.dom; f must be validated.
inline Subquotient kernel_group(const GroupHom& f) {
    IntMatrix k = preimage_lattice(f.mat, f.cod.relations);
    return subquotient(k, f.dom.relations);
}

inline PresentedAbelianGroup cokernel_group(const GroupHom& f) {
    return {f.cod.gens, hconcat(f.mat, f.cod.relations)};
}

inline bool is_injective(const GroupHom& f) {
    return group_trivial(kernel_group(f).group);
}

inline bool is_surjective(const GroupHom& f) {
    return group_trivial(cokernel_group(f));
}

struct InducedMap {
    GroupHom hom;
    bool injective = false;
    bool surjective = false;
};

// Map induced on homology by a degree-n chain map between the middle groups
// of two three-term complexes. The chain map must send cocycles to cocycles
// and boundaries to boundaries; both containments are checked exactly.
inline InducedMap induced_map_on_homology(const GroupHom& chain_map,
                                          const GroupHom& src_in, const GroupHom& src_out,
                                          const GroupHom& tgt_in, const GroupHom& tgt_out) {
    require_same_presentation(chain_map.dom, src_out.dom,
                              "induced map: chain map domain is not the source middle group");
    require_same_presentation(chain_map.cod, tgt_out.dom,
                              "induced map: chain map codomain is not the target middle group");
    HomologyData src = complex_homology_full(src_in, src_out);
    HomologyData tgt = complex_homology_full(tgt_in, tgt_out);

    ColumnSpanSolver tgt_cocycles(tgt.kernel_gens);
    IntMatrix mapped = chain_map.mat * src.kernel_gens;
    for (std::size_t j = 0; j < mapped.cols(); ++j)
        if (!tgt_cocycles.contains(mapped.column(j)))
            throw invalid_input("induced map: non-commuting square (cocycles not preserved)");

    IntMatrix src_bnd = hconcat(src_in.mat, src_out.dom.relations);
    IntMatrix tgt_bnd = hconcat(tgt_in.mat, tgt_out.dom.relations);
    ColumnSpanSolver tgt_bnd_span(tgt_bnd);
    IntMatrix mapped_bnd = chain_map.mat * src_bnd;
    for (std::size_t j = 0; j < mapped_bnd.cols(); ++j)
        if (!tgt_bnd_span.contains(mapped_bnd.column(j)))
            throw invalid_input("induced map: non-commuting square (boundaries not preserved)");

    IntMatrix induced(tgt.group.gens, src.group.gens);
    IntMatrix images = chain_map.mat * src.sub.embedding;
    for (std::size_t j = 0; j < src.group.gens; ++j) {
        auto y = tgt.sub.coords_of(images.column(j));
        for (std::size_t i = 0; i < tgt.group.gens; ++i) induced(i, j) = y[i];
    }
    InducedMap out;
    out.hom = GroupHom{src.group, tgt.group, std::move(induced)};
    if (!hom_validate(out.hom).ok)
        throw internal_error("induced map failed well-definedness check");
    out.injective = is_injective(out.hom);
    out.surjective = is_surjective(out.hom);
    return out;
}

}  // namespace semicoh
