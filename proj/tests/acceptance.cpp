// Acceptance gate: one line per criterion, exit 0 only if all pass.
//
//   1. E5 fixture values (phi_dim, class sets, alpha trace, periodic core).
//   2. E8 fixture values (phi_dim 6, delta Kupisch, Gustafson d).
//   3. Sharpness family n = 3..8 attains phi_dim = findim = 2n-2.
//   4. Exhaustive census N = 3..5 with c_i <= 2N+2: zero check failures.
//   5. Matrix-rank phi oracle agrees with the class-set computation.
//   6. Property suite over 1000 random Kupisch series: zero violations.
//
// All comparisons are exact (integer invariants; no tolerances).

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nakayama;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, double seconds,
            const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << " (" << name
              << ")  [" << seconds << " s]  " << detail << "\n";
    if (!ok)
        ++failures;
}

template <typename F>
void criterion(int idx, const std::string& name, double time_limit, F&& body) {
    std::ostringstream detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (secs > time_limit) {
        ok = false;
        detail << " [exceeded " << time_limit << " s limit]";
    }
    report(idx, name, ok, secs, detail.str());
}

bool criterion_e5(std::ostringstream& out) {
    Algebra a = fixtures::e5();
    PhiReport rep = phi_report(a);
    std::vector<MaybeModule> all;
    for (const UniserialModule& m : all_indecomposables(a))
        all.push_back(m);
    auto trace = detail::class_trace(a, all);
    auto per = omega_periodic(a);
    IsoClassSet expected = {{2, 2}, {4, 3}};

    bool ok = rep.phi_dim == 2 && rep.r == 2 && rep.findim == 1;
    ok &= trace.sets.size() >= 3 && trace.sets[2] == expected;
    ok &= rep.alpha_trace.size() >= 3 && rep.alpha_trace[0] == 16 &&
          rep.alpha_trace[1] == 5 && rep.alpha_trace[2] == 2;
    ok &= per.members == expected &&
          per.perm.at({2, 2}) == UniserialModule{4, 3} &&
          per.perm.at({4, 3}) == UniserialModule{2, 2};
    out << "phi_dim=" << rep.phi_dim << " r=" << rep.r << " findim=" << rep.findim
        << " alpha_trace=" << rep.alpha_trace[0] << "," << rep.alpha_trace[1] << ","
        << rep.alpha_trace[2] << " |omega_per|=" << per.members.size();
    return ok;
}

bool criterion_e8(std::ostringstream& out) {
    Algebra a = fixtures::e8();
    int pd = phi_dim(a);
    auto dk = delta_system(a).delta_kupisch;
    GustafsonResult g = gustafson_d(a);
    bool ok = pd == 6 && dk == std::vector<int>{6, 6, 5, 6} && g.d == 2 &&
              2 * g.d + 2 == 6 && g.bound_ok;
    out << "phi_dim=" << pd << " delta_kupisch=" << dk[0] << "," << dk[1] << ","
        << dk[2] << "," << dk[3] << " d=" << g.d;
    return ok;
}

bool criterion_sharpness(std::ostringstream& out) {
    bool ok = true;
    for (int n = 3; n <= 8; ++n) {
        Algebra g = sharpness_family(n);
        int r = g.num_relations(), pd = phi_dim(g), fd = findim(g);
        bool here = r == n - 1 && pd == 2 * n - 2 && fd == 2 * n - 2 && pd == 2 * r;
        ok &= here;
        if (!here)
            out << " n=" << n << ": r=" << r << " phi=" << pd << " findim=" << fd;
    }
    if (ok)
        out << "n=3..8 all attain phi_dim = findim = 2r = 2n-2";
    return ok;
}

bool criterion_census(std::ostringstream& out) {
    long long total = 0, bad = 0;
    for (int n = 3; n <= 5; ++n) {
        CensusParams params;
        params.n_min = params.n_max = n;
        params.max_proj_len = 2 * n + 2;
        params.workers = std::max(1u, std::thread::hardware_concurrency());
        CensusResult res = run_census(params);
        total += res.summary.total;
        for (const CensusRecord& rec : res.records) {
            bool good = rec.checks_passed;
            if (!rec.gldim.is_finite()) {
                good &= rec.phi_dim % 2 == 0;          // Thm: evenness
                good &= rec.phi_dim <= 2 * rec.r;      // Thm: 2r bound
                good &= (rec.phi_dim == 0) == rec.self_injective;
                good &= rec.phi_dim != 1;
                good &= (rec.phi_dim == 2) ==
                        (rec.delta_in_omega_per && !rec.self_injective);
            } else {
                good &= rec.gldim.value() <= 2 * rec.n - 2; // Gustafson
            }
            if (!good) {
                ++bad;
                if (bad == 1)
                    out << "first failure at " << rec.kupisch << "; ";
            }
        }
    }
    out << total << " algebras, " << bad << " failures";
    return bad == 0;
}

bool criterion_oracle(std::ostringstream& out) {
    long long checked = 0, mismatches = 0;
    auto compare = [&](const Algebra& a, const std::vector<MaybeModule>& ms) {
        ++checked;
        if (phi(a, ms) != oracles::phi_matrix_rank(a, ms))
            ++mismatches;
    };
    // Full module multiset on every census algebra at N = 3, 4.
    for (int n = 3; n <= 4; ++n)
        for (const Algebra& a : enumerate_algebras(n, 2 * n + 2)) {
            std::vector<MaybeModule> all;
            for (const UniserialModule& m : all_indecomposables(a))
                all.push_back(m);
            compare(a, all);
        }
    // 200 seeded random multisets on each of 200 sampled N = 5 algebras.
    auto pool = enumerate_algebras(5, 12);
    std::mt19937 rng(55555);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const Algebra& a = pool[pick(rng)];
        auto mods = all_indecomposables(a);
        std::uniform_int_distribution<std::size_t> mod_pick(0, mods.size() - 1);
        std::uniform_int_distribution<int> size_pick(1, 6);
        for (int j = 0; j < 200; ++j) {
            std::vector<MaybeModule> ms;
            int k = size_pick(rng);
            for (int s = 0; s < k; ++s)
                ms.push_back(mods[mod_pick(rng)]);
            compare(a, ms);
        }
    }
    out << checked << " multisets, " << mismatches << " mismatches";
    return mismatches == 0;
}

bool criterion_properties(std::ostringstream& out) {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> n_dist(3, 10);
    long long violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = n_dist(rng);
        Algebra a = Algebra::from_kupisch(n, oracles::random_kupisch(rng, n, 30));
        for (const CheckResult& c : detail::invariant_checks(a)) {
            if (c.status == Status::Pass)
                continue;
            ++violations;
            if (violations == 1)
                out << "first violation: " << c.name << " on "
                    << census_record(a).kupisch << " (" << c.evidence << "); ";
        }
    }
    out << "1000 series, " << violations << " violations";
    return violations == 0;
}

} // namespace

int main() {
    criterion(1, "E5 fixture", 1.0, criterion_e5);
    criterion(2, "E8 fixture", 1.0, criterion_e8);
    criterion(3, "sharpness family", 5.0, criterion_sharpness);
    criterion(4, "exhaustive census N=3..5", 300.0, criterion_census);
    criterion(5, "matrix-rank phi oracle", 300.0, criterion_oracle);
    criterion(6, "random property suite", 300.0, criterion_properties);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 6 criteria passed\n";
    return 0;
}
