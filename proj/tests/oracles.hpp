// Independent re-derivations of the library's computations, used only by
// the test suite. Each oracle takes a different route than the production
// code so that agreement is evidence, not tautology.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "nakayama/census.hpp"

namespace oracles {

using namespace nakayama;

/// Kupisch series from a relation system by the longest-nonzero-path
/// argument: the projective at i is cut by whichever relation arc it runs
/// into first, so c_i = min over relations (s, L) of ((s - i) mod N) + L.
inline std::vector<int> kupisch_from_relations(
    int n, const std::vector<std::pair<int, int>>& rels) {
    std::vector<int> series(n);
    for (int i = 1; i <= n; ++i) {
        int best = -1;
        for (auto [s, L] : rels) {
            int off = (s - i) % n;
            if (off < 0)
                off += n;
            int len = off + L;
            if (best < 0 || len < best)
                best = len;
        }
        series[i - 1] = best;
    }
    return series;
}

/// pdim by brute-force bounded iteration: walk at most Sum(c_i) + 1 steps.
/// If no projective shows up, the trajectory has revisited some module by
/// pigeonhole, so the dimension is infinite. A finite answer is checked
/// against the Gustafson cutoff 2N - 2.
inline Dim pdim_bounded(const Algebra& a, UniserialModule m) {
    const int bound = a.total_modules() + 1;
    for (int k = 0; k <= bound; ++k) {
        if (is_projective(a, m))
            return k <= 2 * a.n_vertices() - 2
                       ? Dim::finite(k)
                       : throw std::logic_error("finite pdim beyond 2N-2");
        m = *syzygy(a, m);
    }
    return Dim::infinite();
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<long long>> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t i = row + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            long long p = rows[row][col], q = rows[i][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] = rows[i][j] * p - rows[row][j] * q;
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// phi by the definition: represent <add M> on the basis of nonprojective
/// indecomposables, apply the syzygy t times, and take the matrix rank.
/// The eventual rank is read off at the first repeat of the full module
/// vector (the state lives on a finite set, so it must cycle); phi is the
/// first t attaining it.
inline int phi_matrix_rank(const Algebra& a, const std::vector<MaybeModule>& ms) {
    std::map<UniserialModule, int> basis;
    for (const UniserialModule& m : all_indecomposables(a))
        if (!is_projective(a, m)) {
            int id = static_cast<int>(basis.size());
            basis.emplace(m, id);
        }

    auto rank_of = [&](const std::vector<MaybeModule>& state) {
        std::vector<std::vector<long long>> rows;
        for (const MaybeModule& m : state) {
            std::vector<long long> row(basis.size(), 0);
            if (m && !is_projective(a, *m))
                row[basis.at(*m)] = 1;
            rows.push_back(std::move(row));
        }
        return matrix_rank(std::move(rows));
    };

    std::vector<int> ranks;
    std::map<std::vector<MaybeModule>, int> seen;
    std::vector<MaybeModule> state = ms;
    while (true) {
        auto [it, fresh] = seen.emplace(state, static_cast<int>(ranks.size()));
        if (!fresh) {
            int eventual = ranks[it->second];
            for (int t = 0;; ++t)
                if (ranks[t] == eventual)
                    return t;
        }
        ranks.push_back(rank_of(state));
        for (MaybeModule& m : state)
            m = syzygy(a, m);
    }
}

/// Enumeration oracle: generate every tuple in [2, max_len]^n and keep the
/// ones satisfying the cyclic Kupisch condition.
inline std::vector<std::vector<int>> filter_all_tuples(int n, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(n, 2);
    while (true) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            ok &= tuple[(i + 1) % n] >= tuple[i] - 1;
        if (ok)
            out.push_back(tuple);
        int i = n - 1;
        while (i >= 0 && tuple[i] == max_len)
            tuple[i--] = 2;
        if (i < 0)
            return out;
        ++tuple[i];
    }
}

/// A uniformly sampled valid Kupisch series: draw left to right respecting
/// the chain condition, retry until the wrap-around constraint holds.
inline std::vector<int> random_kupisch(std::mt19937& rng, int n, int c_max) {
    while (true) {
        std::vector<int> series(n);
        series[0] = std::uniform_int_distribution<int>(2, c_max)(rng);
        for (int i = 1; i < n; ++i) {
            int lo = std::max(2, series[i - 1] - 1);
            series[i] = std::uniform_int_distribution<int>(lo, c_max)(rng);
        }
        if (series[0] >= series[n - 1] - 1)
            return series;
    }
}

} // namespace oracles
