#pragma once

#include <optional>
#include <vector>

#include "nakayama/module.hpp"

namespace nakayama {

/// The canonical shortest modules with top in S' and socle in S, together
/// with the induced Kupisch series on the Delta level.
struct DeltaSystem {
    std::vector<UniserialModule> deltas; // Delta_1..Delta_r, tops ascending
    std::vector<int> delta_kupisch;      // d_j = Delta-length of P_{top(Delta_j)}
};

/// The relation ends partition the cycle into r arcs; each arc, read from
/// the successor of one end to the next end, is a Delta module. Arcs are
/// labelled by ascending top vertex, which makes top(Delta_{j+1}) the
/// cyclic successor of socle(Delta_j).
inline std::vector<UniserialModule> delta_modules(const Algebra& a) {
    const int n = a.n_vertices();
    auto rels = a.relations();
    std::vector<int> ends;
    for (const Relation& rel : rels)
        ends.push_back(rel.end);
    std::sort(ends.begin(), ends.end());

    std::vector<UniserialModule> deltas;
    deltas.reserve(ends.size());
    const int r = static_cast<int>(ends.size());
    for (int j = 0; j < r; ++j) {
        int prev = ends[(j + r - 1) % r];
        int top = wrap(prev + 1, n);
        int len = wrap(ends[j] - top + 1, n);
        deltas.push_back({top, len});
    }
    std::sort(deltas.begin(), deltas.end());
    return deltas;
}

/// Decompose a module as a stack of consecutive Delta factors, top to socle.
/// Succeeds exactly when the top lies in S', the socle in S, and the arcs
/// align; returns the 1-based Delta indices. std::nullopt means the module
/// is not Delta-filtered (a normal outcome, not an error).
inline std::optional<std::vector<int>>
delta_decompose_with(const Algebra& a, const std::vector<UniserialModule>& deltas,
                     const UniserialModule& m) {
    const int r = static_cast<int>(deltas.size());
    int j = -1;
    for (int i = 0; i < r; ++i)
        if (deltas[i].top == m.top)
            j = i;
    if (j < 0)
        return std::nullopt;
    std::vector<int> indices;
    int consumed = 0;
    while (consumed < m.len) {
        indices.push_back(j + 1);
        consumed += deltas[j].len;
        j = (j + 1) % r;
    }
    if (consumed != m.len)
        return std::nullopt;
    return indices;
}

inline std::optional<std::vector<int>> delta_decompose(const Algebra& a,
                                                       const UniserialModule& m) {
    return delta_decompose_with(a, delta_modules(a), m);
}

/// The r projectives with top in S', each with its Delta-length, ordered by
/// Delta-top index.
inline std::vector<std::pair<int, int>> delta_projectives(const Algebra& a) {
    auto deltas = delta_modules(a);
    std::vector<std::pair<int, int>> result;
    for (const UniserialModule& d : deltas) {
        UniserialModule p{d.top, a.proj_len(d.top)};
        auto dec = delta_decompose_with(a, deltas, p);
        if (!dec)
            throw std::logic_error("projective with top in S' is not Delta-filtered");
        result.emplace_back(d.top, static_cast<int>(dec->size()));
    }
    return result;
}

inline DeltaSystem delta_system(const Algebra& a) {
    DeltaSystem sys;
    sys.deltas = delta_modules(a);
    for (auto [vertex, dlen] : delta_projectives(a))
        sys.delta_kupisch.push_back(dlen);
    return sys;
}

inline bool delta_contains_projective(const Algebra& a) {
    for (const UniserialModule& d : delta_modules(a))
        if (is_projective(a, d))
            return true;
    return false;
}

/// Gustafson's index shift f(i) = [i + d_i] on [1, r], driven by the
/// Delta-level Kupisch series.
struct GustafsonShift {
    std::vector<int> f; // f[i-1] = f(i), values in [1, r]
    int d;              // least iterate after which f permutes its image
};

inline GustafsonShift gustafson_shift(const std::vector<int>& delta_kupisch) {
    const int r = static_cast<int>(delta_kupisch.size());
    GustafsonShift out;
    out.f.resize(r);
    for (int i = 1; i <= r; ++i)
        out.f[i - 1] = wrap(i + delta_kupisch[i - 1], r);

    std::vector<bool> in_image(r + 1, true);
    auto image_of = [&](const std::vector<bool>& dom) {
        std::vector<bool> img(r + 1, false);
        for (int i = 1; i <= r; ++i)
            if (dom[i])
                img[out.f[i - 1]] = true;
        return img;
    };
    auto permutes = [&](const std::vector<bool>& dom) {
        std::vector<bool> hit(r + 1, false);
        for (int i = 1; i <= r; ++i) {
            if (!dom[i])
                continue;
            int fi = out.f[i - 1];
            if (!dom[fi] || hit[fi])
                return false;
            hit[fi] = true;
        }
        return true;
    };
    int d = 0;
    while (!permutes(in_image)) {
        in_image = image_of(in_image);
        ++d;
    }
    out.d = d;
    return out;
}

} // namespace nakayama
