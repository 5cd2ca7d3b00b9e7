#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "root.hpp"
#include "semigroup.hpp"

namespace semicoh {

enum class ModuleKind { em, zero, root };

inline const char* kind_name(ModuleKind k) {
    switch (k) {
        case ModuleKind::em: return "em";
        case ModuleKind::zero: return "zero";
        case ModuleKind::root: return "root";
    }
    return "?";
}

// Abelian coefficient group plus one endomorphism matrix per acting element.
// For kind zero the zero element of the carrier has no entry.
struct CoefficientModule {
    PresentedAbelianGroup group;
    ModuleKind kind = ModuleKind::em;
    std::map<std::string, IntMatrix> actions;

    const IntMatrix& act(const std::string& name) const {
        auto it = actions.find(name);
        if (it == actions.end()) throw invalid_input("missing action for element " + name);
        return it->second;
    }
};

struct ModuleValidation {
    bool ok = true;
    std::string message;
    std::pair<std::string, std::string> witness;  // acting pair for law violations
};

namespace detail {

// Structural checks shared by all kinds: coverage and well-definedness.
inline void check_action_endos(const CoefficientModule& mod,
                               const std::vector<std::string>& required,
                               bool zero_forbidden, const std::string& zero_name) {
    for (const auto& name : required)
        if (!mod.actions.count(name)) throw invalid_input("missing action for element " + name);
    for (const auto& [name, m] : mod.actions) {
        if (zero_forbidden && name == zero_name)
            throw invalid_input("kind zero must omit the action of the zero element");
        if (std::find(required.begin(), required.end(), name) == required.end())
            throw invalid_input("action for unknown element " + name);
        GroupHom endo{mod.group, mod.group, m};
        if (!hom_validate(endo).ok)
            throw invalid_input("action of " + name + " is not an endomorphism");
    }
}

inline bool acts_equal(const CoefficientModule& mod, const IntMatrix& a, const IntMatrix& b) {
    GroupHom f{mod.group, mod.group, a};
    GroupHom g{mod.group, mod.group, b};
    return homs_equal(f, g);
}

}  // namespace detail

// Kind em over a semigroup: total action, act(s)act(t) = act(st), and
// act(identity) = id when an identity exists.
inline ModuleValidation validate_module(const CoefficientModule& mod, const FiniteSemigroup& s) {
    if (mod.kind == ModuleKind::root)
        throw invalid_input("root-kind module needs a root carrier");
    std::vector<std::string> required;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!(mod.kind == ModuleKind::zero && s.zero && *s.zero == i))
            required.push_back(s.elements[i]);
    if (mod.kind == ModuleKind::zero && !s.zero)
        throw invalid_input("kind zero needs a semigroup with zero");
    detail::check_action_endos(mod, required, mod.kind == ModuleKind::zero,
                               s.zero ? s.elements[*s.zero] : "");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (mod.kind == ModuleKind::zero && *s.zero == i) continue;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (mod.kind == ModuleKind::zero && *s.zero == j) continue;
            std::size_t p = s.product(i, j);
            if (mod.kind == ModuleKind::zero && *s.zero == p) continue;  // unconstrained
            IntMatrix lhs = mod.act(s.elements[i]) * mod.act(s.elements[j]);
            if (!detail::acts_equal(mod, lhs, mod.act(s.elements[p])))
                return {false,
                        "action law fails at (" + s.elements[i] + ", " + s.elements[j] + ")",
                        {s.elements[i], s.elements[j]}};
        }
    }
    if (mod.kind == ModuleKind::em && s.identity) {
        const std::string& e = s.elements[*s.identity];
        if (!detail::acts_equal(mod, mod.act(e), IntMatrix::identity(mod.group.gens)))
            return {false, "act(" + e + ") is not the identity", {e, e}};
    }
    return {};
}

// Kind root over a root: act(x)act(y) = act(m(x,y)) wherever m is defined.
inline ModuleValidation validate_module(const CoefficientModule& mod, const Root& w) {
    if (mod.kind != ModuleKind::root)
        throw invalid_input("semigroup-kind module needs a semigroup carrier");
    detail::check_action_endos(mod, w.elements, false, "");
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (!w.defined(i, j)) continue;
            IntMatrix lhs = mod.act(w.elements[i]) * mod.act(w.elements[j]);
            if (!detail::acts_equal(mod, lhs, mod.act(w.elements[w.product(i, j)])))
                return {false,
                        "action law fails at (" + w.elements[i] + ", " + w.elements[j] + ")",
                        {w.elements[i], w.elements[j]}};
        }
    return {};
}

inline CoefficientModule trivial_module(const PresentedAbelianGroup& g,
                                        const FiniteSemigroup& s, ModuleKind kind) {
    CoefficientModule mod;
    mod.group = g;
    mod.kind = kind;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (kind == ModuleKind::zero && s.zero && *s.zero == i) continue;
        mod.actions.emplace(s.elements[i], IntMatrix::identity(g.gens));
    }
    if (kind == ModuleKind::zero && !s.zero)
        throw invalid_input("kind zero needs a semigroup with zero");
    return mod;
}

inline CoefficientModule trivial_module(const PresentedAbelianGroup& g, const Root& w) {
    CoefficientModule mod;
    mod.group = g;
    mod.kind = ModuleKind::root;
    for (const auto& name : w.elements)
        mod.actions.emplace(name, IntMatrix::identity(g.gens));
    return mod;
}

// Scalar-action module: element name -> multiplication by the given scalar.
inline CoefficientModule scalar_module(const PresentedAbelianGroup& g, ModuleKind kind,
                                       const std::vector<std::pair<std::string, Int>>& scalars) {
    CoefficientModule mod;
    mod.group = g;
    mod.kind = kind;
    for (const auto& [name, c] : scalars) mod.actions.emplace(name, scalar_matrix(g.gens, c));
    return mod;
}

// Extend an em-module along adjoin_identity: the new identity acts as id.
inline CoefficientModule extend_to_adjoined_identity(const CoefficientModule& mod,
                                                     const FiniteSemigroup& s_before,
                                                     const FiniteSemigroup& s_after) {
    CoefficientModule out = mod;
    if (s_after.size() == s_before.size()) return out;
    out.actions.emplace(s_after.elements.back(), IntMatrix::identity(mod.group.gens));
    return out;
}

// Extend an em-module along adjoin_zero: the new zero acts as 0.
inline CoefficientModule extend_to_adjoined_zero(const CoefficientModule& mod,
                                                 const FiniteSemigroup& s_before,
                                                 const FiniteSemigroup& s_after) {
    CoefficientModule out = mod;
    if (s_after.size() == s_before.size()) return out;
    out.actions.emplace(s_after.elements.back(), IntMatrix(mod.group.gens, mod.group.gens));
    return out;
}

// Reinterpret an em/zero module over a carrier as a root-kind module on a
// root whose elements are a subset of the carrier's names.
inline CoefficientModule restrict_to_root(const CoefficientModule& mod, const Root& w) {
    CoefficientModule out;
    out.group = mod.group;
    out.kind = ModuleKind::root;
    for (const auto& name : w.elements) out.actions.emplace(name, mod.act(name));
    return out;
}

// Module data in canonical coordinates, ready for cochain assembly.
struct CanonModule {
    std::vector<Int> moduli;  // invariant-factor chain, 0 = free
    std::size_t gens = 0;
    bool uniform = false;  // all moduli equal (including the all-free case)
    Int m = 0;             // the uniform modulus when uniform
    std::map<std::string, IntMatrix> act;

    const IntMatrix& action(const std::string& name) const {
        auto it = act.find(name);
        if (it == act.end()) throw invalid_input("missing action for element " + name);
        return it->second;
    }
};

inline CanonModule canonical_module(const CoefficientModule& mod) {
    CanonicalForm c = canonicalize(mod.group);
    CanonModule out;
    out.moduli = c.moduli;
    out.gens = c.moduli.size();
    out.uniform = true;
    for (const auto& mi : c.moduli)
        if (mi != c.moduli[0]) out.uniform = false;
    out.m = out.gens ? c.moduli[0] : Int(1);
    if (!out.uniform) out.m = 0;
    for (const auto& [name, a] : mod.actions) out.act.emplace(name, c.to_canon * a * c.from_canon);
    return out;
}

}  // namespace semicoh
