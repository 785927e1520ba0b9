#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

class InvalidModule : public std::runtime_error {
public:
    explicit InvalidModule(const std::string& reason)
        : std::runtime_error("invalid module: " + reason) {}
};

/// An indecomposable uniserial module, determined by its top vertex and
/// length. Composition factors top-to-socle are S_t, S_{t+1}, ...
struct UniserialModule {
    int top;
    int len;

    friend auto operator<=>(const UniserialModule&, const UniserialModule&) = default;
};

/// The zero module is a separate sentinel, not a UniserialModule.
using MaybeModule = std::optional<UniserialModule>;

inline UniserialModule module(const Algebra& a, int top, int len) {
    if (top < 1 || top > a.n_vertices())
        throw InvalidModule("top vertex " + std::to_string(top) + " out of range");
    if (len < 1 || len > a.proj_len(top))
        throw InvalidModule("length " + std::to_string(len) + " not in [1, c_" +
                            std::to_string(top) + " = " +
                            std::to_string(a.proj_len(top)) + "]");
    return {top, len};
}

inline int socle_vertex(const Algebra& a, const UniserialModule& m) {
    return wrap(m.top + m.len - 1, a.n_vertices());
}

inline bool is_projective(const Algebra& a, const UniserialModule& m) {
    return m.len == a.proj_len(m.top);
}

inline UniserialModule projective_cover(const Algebra& a, const UniserialModule& m) {
    return {m.top, a.proj_len(m.top)};
}

inline MaybeModule syzygy(const Algebra& a, const MaybeModule& m) {
    if (!m)
        return std::nullopt;
    int c = a.proj_len(m->top);
    if (m->len == c)
        return std::nullopt;
    return UniserialModule{wrap(m->top + m->len, a.n_vertices()), c - m->len};
}

/// A projective dimension: either a finite value or infinity.
class Dim {
public:
    static Dim finite(int k) { return Dim(k); }
    static Dim infinite() { return Dim(); }

    bool is_finite() const { return value_.has_value(); }
    int value() const { return *value_; }

    std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend bool operator==(const Dim&, const Dim&) = default;

private:
    Dim() = default;
    explicit Dim(int k) : value_(k) {}
    std::optional<int> value_;
};

/// pdim m = min{k : the k-th syzygy is projective}. Infinite projective
/// dimension is detected exactly: the syzygy trajectory lives on a finite
/// set, so revisiting a module before any projective certifies a cycle.
inline Dim pdim(const Algebra& a, const UniserialModule& m) {
    std::set<UniserialModule> seen;
    UniserialModule cur = m;
    int k = 0;
    while (true) {
        if (is_projective(a, cur))
            return Dim::finite(k);
        if (!seen.insert(cur).second)
            return Dim::infinite();
        cur = *syzygy(a, cur);
        ++k;
    }
}

inline Dim gldim(const Algebra& a) {
    int best = 0;
    for (int v = 1; v <= a.n_vertices(); ++v) {
        Dim d = pdim(a, {v, 1});
        if (!d.is_finite())
            return Dim::infinite();
        best = std::max(best, d.value());
    }
    if (best > 2 * a.n_vertices() - 2)
        throw std::logic_error("finite global dimension exceeds 2N-2");
    return Dim::finite(best);
}

inline std::vector<UniserialModule> all_indecomposables(const Algebra& a) {
    std::vector<UniserialModule> mods;
    mods.reserve(a.total_modules());
    for (int t = 1; t <= a.n_vertices(); ++t)
        for (int len = 1; len <= a.proj_len(t); ++len)
            mods.push_back({t, len});
    return mods;
}

/// Supremum of the finite projective dimensions.
inline int findim(const Algebra& a) {
    int best = 0;
    for (const UniserialModule& m : all_indecomposables(a)) {
        Dim d = pdim(a, m);
        if (d.is_finite())
            best = std::max(best, d.value());
    }
    return best;
}

/// Injective = no module with the same socle vertex is strictly longer.
/// Lengths exceeding N wrap around the cycle, so every residue class of
/// lengths up to c_t has to be considered.
inline bool is_injective(const Algebra& a, const UniserialModule& m) {
    const int n = a.n_vertices();
    int s = socle_vertex(a, m);
    for (int t = 1; t <= n; ++t) {
        int base = wrap(s - t + 1, n); // shortest length from t with socle s
        int c = a.proj_len(t);
        if (base > c)
            continue;
        int longest = base + ((c - base) / n) * n;
        if (longest > m.len)
            return false;
    }
    return true;
}

struct ResolutionStep {
    UniserialModule cover;
    MaybeModule syz;
};

struct FiniteAt {
    int k; // = pdim of the start module
    friend bool operator==(const FiniteAt&, const FiniteAt&) = default;
};
struct PeriodicEntryAt {
    int t; // first syzygy index lying on the periodic cycle
    friend bool operator==(const PeriodicEntryAt&, const PeriodicEntryAt&) = default;
};

struct ResolutionTrail {
    UniserialModule start;
    std::vector<ResolutionStep> steps;
    std::variant<FiniteAt, PeriodicEntryAt> outcome;
};

/// Walk the minimal projective resolution until it stops at a projective or
/// enters the periodic part. The first revisited module marks the cycle entry.
inline ResolutionTrail resolve(const Algebra& a, const UniserialModule& m) {
    ResolutionTrail trail{m, {}, FiniteAt{0}};
    std::map<UniserialModule, int> first_seen;
    UniserialModule cur = m;
    int k = 0;
    while (true) {
        if (is_projective(a, cur)) {
            trail.outcome = FiniteAt{k};
            return trail;
        }
        auto [it, fresh] = first_seen.emplace(cur, k);
        if (!fresh) {
            trail.outcome = PeriodicEntryAt{it->second};
            trail.steps.resize(it->second); // drop the lap around the cycle
            return trail;
        }
        MaybeModule next = syzygy(a, cur);
        trail.steps.push_back({projective_cover(a, cur), next});
        cur = *next;
        ++k;
    }
}

} // namespace nakayama
