#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/delta.hpp"
#include "nakayama/module.hpp"

namespace nakayama {

/// A deduplicated, sorted set of indecomposable iso-classes. In K_0 every
/// nonzero class of an indecomposable is a basis element, so these sets
/// carry the rank bookkeeping for the Igusa-Todorov function.
using IsoClassSet = std::vector<UniserialModule>;

inline IsoClassSet make_class_set(const std::vector<MaybeModule>& ms) {
    IsoClassSet set;
    for (const MaybeModule& m : ms)
        if (m)
            set.push_back(*m);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

/// Number of pairwise non-isomorphic nonprojective indecomposable summands.
inline int alpha(const Algebra& a, const std::vector<MaybeModule>& ms) {
    int count = 0;
    for (const UniserialModule& m : make_class_set(ms))
        if (!is_projective(a, m))
            ++count;
    return count;
}

namespace detail {

/// Distinct nonprojective classes; projectives and Zero vanish in K_0.
inline IsoClassSet nonprojective_classes(const Algebra& a,
                                         const std::vector<MaybeModule>& ms) {
    IsoClassSet set;
    for (const UniserialModule& m : make_class_set(ms))
        if (!is_projective(a, m))
            set.push_back(m);
    return set;
}

inline IsoClassSet syzygy_classes(const Algebra& a, const IsoClassSet& set) {
    std::vector<MaybeModule> next;
    next.reserve(set.size());
    for (const UniserialModule& m : set)
        next.push_back(syzygy(a, m));
    return nonprojective_classes(a, next);
}

/// The trace of class sets L^t<add M> until it enters a cycle. Ranks are
/// non-increasing, hence constant on the cycle; phi is the first index
/// attaining the cycle rank.
struct ClassTrace {
    std::vector<IsoClassSet> sets; // sets[t] = classes of the t-th syzygies
    int phi;
};

inline ClassTrace class_trace(const Algebra& a, const std::vector<MaybeModule>& ms) {
    ClassTrace trace;
    std::map<IsoClassSet, int> seen;
    IsoClassSet cur = nonprojective_classes(a, ms);
    while (true) {
        auto [it, fresh] = seen.emplace(cur, static_cast<int>(trace.sets.size()));
        if (!fresh) {
            std::size_t eventual = trace.sets[it->second].size();
            for (std::size_t t = 0;; ++t) {
                if (trace.sets[t].size() == eventual) {
                    trace.phi = static_cast<int>(t);
                    break;
                }
            }
            return trace;
        }
        trace.sets.push_back(cur);
        cur = syzygy_classes(a, cur);
    }
}

} // namespace detail

/// The Igusa-Todorov function: least t at which the rank of L^t<add M>
/// stabilizes. Rank equals the number of distinct nonzero nonprojective
/// classes, since syzygies of indecomposables stay indecomposable.
inline int phi(const Algebra& a, const std::vector<MaybeModule>& ms) {
    return detail::class_trace(a, ms).phi;
}

inline int phi(const Algebra& a, const std::vector<UniserialModule>& ms) {
    std::vector<MaybeModule> wrapped(ms.begin(), ms.end());
    return phi(a, wrapped);
}

/// All modules lying on cycles of the syzygy functional graph, with the
/// restriction of the syzygy map (a bijection on that set).
struct OmegaPeriodic {
    IsoClassSet members;
    std::map<UniserialModule, UniserialModule> perm;
};

inline OmegaPeriodic omega_periodic(const Algebra& a) {
    auto mods = all_indecomposables(a);
    std::map<UniserialModule, int> index;
    for (std::size_t i = 0; i < mods.size(); ++i)
        index[mods[i]] = static_cast<int>(i);

    // Peel vertices of in-degree zero; what survives lies on cycles.
    std::vector<int> indeg(mods.size(), 0);
    std::vector<int> succ(mods.size(), -1);
    for (std::size_t i = 0; i < mods.size(); ++i) {
        MaybeModule s = syzygy(a, mods[i]);
        if (s) {
            succ[i] = index.at(*s);
            ++indeg[succ[i]];
        }
    }
    std::vector<int> stack;
    for (std::size_t i = 0; i < mods.size(); ++i)
        if (indeg[i] == 0)
            stack.push_back(static_cast<int>(i));
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (succ[v] >= 0 && --indeg[succ[v]] == 0)
            stack.push_back(succ[v]);
    }

    OmegaPeriodic out;
    for (std::size_t i = 0; i < mods.size(); ++i)
        if (indeg[i] > 0)
            out.members.push_back(mods[i]);
    for (const UniserialModule& m : out.members)
        out.perm[m] = *syzygy(a, m);

    // Sanity: the restriction must be a bijection of the member set.
    std::set<UniserialModule> image;
    for (const auto& [src, dst] : out.perm) {
        if (!std::binary_search(out.members.begin(), out.members.end(), dst) ||
            !image.insert(dst).second)
            throw std::logic_error("syzygy is not a bijection on the periodic set");
    }
    return out;
}

/// Projective covers of the periodic modules, deduplicated.
inline IsoClassSet periodic_projectives(const Algebra& a) {
    std::vector<MaybeModule> covers;
    for (const UniserialModule& m : omega_periodic(a).members)
        covers.push_back(projective_cover(a, m));
    return make_class_set(covers);
}

/// rho(m) = least t with the t-th syzygy periodic; undefined (nullopt)
/// exactly when pdim is finite.
inline std::optional<int> rho(const Algebra& a, const UniserialModule& m) {
    auto per = omega_periodic(a);
    UniserialModule cur = m;
    int t = 0;
    while (true) {
        if (std::binary_search(per.members.begin(), per.members.end(), cur))
            return t;
        if (is_projective(a, cur))
            return std::nullopt;
        cur = *syzygy(a, cur);
        ++t;
    }
}

struct PhiReport {
    std::string algebra_id; // Kupisch series as text
    int r = 0;
    bool self_injective = false;
    Dim gldim = Dim::infinite();
    int findim = 0;
    int phi_dim = 0;
    std::vector<int> alpha_trace;
    int omega_per_size = 0;
    bool delta_subset_of_omega_per = false;
    int gustafson_d = 0;
};

/// phi of the sum of all indecomposables; when the global dimension is
/// finite the two values must coincide and that is asserted, not assumed.
inline int phi_dim(const Algebra& a) {
    std::vector<MaybeModule> all;
    for (const UniserialModule& m : all_indecomposables(a))
        all.push_back(m);
    int result = phi(a, all);
    Dim g = gldim(a);
    if (g.is_finite() && g.value() != result)
        throw std::logic_error("phi-dimension disagrees with finite global dimension");
    return result;
}

inline PhiReport phi_report(const Algebra& a) {
    PhiReport rep;
    {
        std::string id;
        for (int i = 0; i < a.n_vertices(); ++i)
            id += (i ? "," : "") + std::to_string(a.kupisch()[i]);
        rep.algebra_id = id;
    }
    rep.r = a.num_relations();
    rep.self_injective = a.is_self_injective();
    rep.gldim = gldim(a);
    rep.findim = findim(a);

    std::vector<MaybeModule> all;
    for (const UniserialModule& m : all_indecomposables(a))
        all.push_back(m);
    auto trace = detail::class_trace(a, all);
    rep.phi_dim = trace.phi;
    if (rep.gldim.is_finite() && rep.gldim.value() != rep.phi_dim)
        throw std::logic_error("phi-dimension disagrees with finite global dimension");
    for (const IsoClassSet& set : trace.sets)
        rep.alpha_trace.push_back(static_cast<int>(set.size()));

    auto per = omega_periodic(a);
    rep.omega_per_size = static_cast<int>(per.members.size());
    rep.delta_subset_of_omega_per = true;
    for (const UniserialModule& d : delta_modules(a))
        if (!std::binary_search(per.members.begin(), per.members.end(), d))
            rep.delta_subset_of_omega_per = false;
    rep.gustafson_d = gustafson_shift(delta_system(a).delta_kupisch).d;
    return rep;
}

} // namespace nakayama
