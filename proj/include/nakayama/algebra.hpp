#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nakayama {

class InvalidKupisch : public std::runtime_error {
public:
    explicit InvalidKupisch(const std::string& reason)
        : std::runtime_error("invalid Kupisch series: " + reason) {}
};

class InvalidRelation : public std::runtime_error {
public:
    explicit InvalidRelation(const std::string& reason)
        : std::runtime_error("invalid relation system: " + reason) {}
};

class RedundantSystem : public std::runtime_error {
public:
    explicit RedundantSystem(const std::string& reason)
        : std::runtime_error("redundant relation system: " + reason) {}
};

/// Reduce a (possibly negative) index to its representative in [1, n].
constexpr int wrap(long long v, int n) {
    long long m = (v - 1) % n;
    if (m < 0)
        m += n;
    return static_cast<int>(m + 1);
}

/// One monomial relation: the zero path of `arrow_count` arrows starting at
/// vertex `start`; `end` is the index of its last arrow.
struct Relation {
    int start;
    int arrow_count;
    int end;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// The projectives sharing a common socle, listed from the minimal member
/// (a relation start) downwards to the projective-injective one.
struct ProjectiveClass {
    int class_index;                  // 1-based, ordered by relation start
    int socle_vertex;
    std::vector<int> member_vertices; // lengths increase by 1 along the list
};

/// A cyclic Nakayama algebra, stored canonically as (N, Kupisch series).
/// The relation presentation is always derived on demand.
class Algebra {
public:
    static Algebra from_kupisch(int n, std::vector<int> series) {
        if (n < 3)
            throw InvalidKupisch("need at least 3 vertices, got " + std::to_string(n));
        if (static_cast<int>(series.size()) != n)
            throw InvalidKupisch("series length " + std::to_string(series.size()) +
                                 " does not match vertex count " + std::to_string(n));
        for (int i = 0; i < n; ++i) {
            if (series[i] < 2)
                throw InvalidKupisch("c_" + std::to_string(i + 1) + " = " +
                                     std::to_string(series[i]) + " < 2");
        }
        for (int i = 0; i < n; ++i) {
            int next = (i + 1) % n;
            if (series[next] < series[i] - 1)
                throw InvalidKupisch("c_" + std::to_string(next + 1) + " = " +
                                     std::to_string(series[next]) + " < c_" +
                                     std::to_string(i + 1) + " - 1 = " +
                                     std::to_string(series[i] - 1));
        }
        return Algebra(n, std::move(series));
    }

    /// Build from an irredundant monomial relation system. Each relation
    /// (start, arrow_count) pins c_start; the remaining lengths follow from
    /// c_v = c_{v+1} + 1 at non-start vertices. The result must reproduce
    /// the given system exactly.
    static Algebra from_relations(int n, const std::vector<std::pair<int, int>>& rels) {
        if (n < 3)
            throw InvalidRelation("need at least 3 vertices");
        if (rels.empty())
            throw InvalidRelation("empty relation system");
        for (std::size_t j = 0; j < rels.size(); ++j) {
            auto [s, L] = rels[j];
            if (s < 1 || s > n)
                throw InvalidRelation("start " + std::to_string(s) + " out of range");
            if (L < 2)
                throw InvalidRelation("arrow count " + std::to_string(L) + " < 2");
            if (j > 0 && rels[j - 1].first >= s)
                throw InvalidRelation("starts must be strictly increasing");
        }
        // A relation whose arrow arc contains another's is implied by it.
        for (std::size_t i = 0; i < rels.size(); ++i) {
            for (std::size_t j = 0; j < rels.size(); ++j) {
                if (i == j)
                    continue;
                int off = (rels[j].first - rels[i].first) % n;
                if (off < 0)
                    off += n;
                if (off + rels[j].second <= rels[i].second)
                    throw RedundantSystem("relation at " + std::to_string(rels[i].first) +
                                          " contains the one at " +
                                          std::to_string(rels[j].first));
            }
        }

        std::vector<int> series(n, 0);
        std::vector<bool> is_start(n + 1, false);
        for (auto [s, L] : rels) {
            series[s - 1] = L;
            is_start[s] = true;
        }
        // Fill backwards from each start across the gap to the previous one.
        for (auto [s, L] : rels) {
            int len = L;
            int v = wrap(s - 1, n);
            while (!is_start[v]) {
                series[v - 1] = ++len;
                v = wrap(v - 1, n);
            }
        }

        Algebra a = [&] {
            try {
                return from_kupisch(n, std::move(series));
            } catch (const InvalidKupisch& e) {
                throw RedundantSystem(std::string("fill-in yields no valid algebra: ") +
                                      e.what());
            }
        }();

        auto derived = a.relations();
        bool same = derived.size() == rels.size();
        for (std::size_t j = 0; same && j < derived.size(); ++j)
            same = derived[j].start == rels[j].first &&
                   derived[j].arrow_count == rels[j].second;
        if (!same)
            throw RedundantSystem("system is not reproduced by its own algebra");
        return a;
    }

    int n_vertices() const { return n_; }
    const std::vector<int>& kupisch() const { return kupisch_; }

    /// c_v, the length of the indecomposable projective P_v.
    int proj_len(int v) const { return kupisch_[v - 1]; }

    /// Relations sit exactly at the vertices where the series does not drop.
    std::vector<Relation> relations() const {
        std::vector<Relation> rels;
        for (int i = 1; i <= n_; ++i) {
            if (proj_len(i) <= proj_len(wrap(i + 1, n_)))
                rels.push_back({i, proj_len(i), wrap(i + proj_len(i) - 1, n_)});
        }
        return rels;
    }

    int num_relations() const {
        int r = 0;
        for (int i = 1; i <= n_; ++i)
            if (proj_len(i) <= proj_len(wrap(i + 1, n_)))
                ++r;
        return r;
    }

    std::vector<ProjectiveClass> projective_classes() const {
        auto rels = relations();
        const int r = static_cast<int>(rels.size());
        std::vector<ProjectiveClass> classes;
        classes.reserve(r);
        for (int j = 0; j < r; ++j) {
            const Relation& rel = rels[j];
            int prev_start = rels[(j + r - 1) % r].start;
            ProjectiveClass cl;
            cl.class_index = j + 1;
            cl.socle_vertex = rel.end;
            int v = rel.start;
            while (true) {
                cl.member_vertices.push_back(v);
                if (v == wrap(prev_start + 1, n_))
                    break;
                v = wrap(v - 1, n_);
            }
            classes.push_back(std::move(cl));
        }
        return classes;
    }

    bool is_self_injective() const {
        return std::all_of(kupisch_.begin(), kupisch_.end(),
                           [&](int c) { return c == kupisch_[0]; });
    }

    /// The relation-end vertices S and their cyclic successors S'.
    std::pair<std::vector<int>, std::vector<int>> socle_marks() const {
        std::vector<int> s, s_prime;
        for (const Relation& rel : relations()) {
            s.push_back(rel.end);
            s_prime.push_back(wrap(rel.end + 1, n_));
        }
        return {std::move(s), std::move(s_prime)};
    }

    int total_modules() const {
        return std::accumulate(kupisch_.begin(), kupisch_.end(), 0);
    }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    Algebra(int n, std::vector<int> series) : n_(n), kupisch_(std::move(series)) {}

    int n_;
    std::vector<int> kupisch_;
};

} // namespace nakayama
