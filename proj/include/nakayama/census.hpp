#pragma once

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "nakayama/theorems.hpp"

namespace nakayama {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& reason) : std::runtime_error(reason) {}
};

struct CensusParams {
    int n_min = 3;
    int n_max = 3;
    int max_proj_len = 2;
    int workers = 1;
    std::string output_path; // empty = no CSV
};

struct CensusRecord {
    std::string kupisch;
    int n = 0;
    int r = 0;
    bool self_injective = false;
    Dim gldim = Dim::infinite();
    int findim = 0;
    int phi_dim = 0;
    int gustafson_d = 0;
    bool delta_in_omega_per = false;
    bool checks_passed = false;
};

struct CensusSummary {
    long long total = 0;
    long long finite_gldim = 0;
    long long infinite_gldim = 0;
    std::map<int, long long> phi_dim_histogram;
    double max_phi_over_2r = 0.0;
    bool all_checks_passed = true;
};

/// Enumerate every Kupisch series with 2 <= c_i <= max_len and
/// c_{i+1} >= c_i - 1 around the cycle, in lexicographic order. Rotated
/// series are enumerated separately; there is no rotation dedup.
inline void enumerate_kupisch(int n, int max_len,
                              const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> series(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (series[0] >= series[n - 1] - 1)
                emit(series);
            return;
        }
        int lo = i == 0 ? 2 : std::max(2, series[i - 1] - 1);
        for (int c = lo; c <= max_len; ++c) {
            // The series can drop by at most one per step on the way back
            // to a value compatible with c_1.
            if (i > 0 && c - (n - 1 - i) > series[0] + 1)
                break;
            series[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<Algebra> enumerate_algebras(int n, int max_len) {
    std::vector<Algebra> out;
    enumerate_kupisch(n, max_len, [&](const std::vector<int>& series) {
        out.push_back(Algebra::from_kupisch(n, series));
    });
    return out;
}

inline CensusRecord census_record(const Algebra& a) {
    PhiReport rep = phi_report(a);
    CensusRecord rec;
    rec.kupisch = rep.algebra_id;
    rec.n = a.n_vertices();
    rec.r = rep.r;
    rec.self_injective = rep.self_injective;
    rec.gldim = rep.gldim;
    rec.findim = rep.findim;
    rec.phi_dim = rep.phi_dim;
    rec.gustafson_d = rep.gustafson_d;
    rec.delta_in_omega_per = rep.delta_subset_of_omega_per;
    rec.checks_passed = all_passed(verify_all(a));
    return rec;
}

inline std::string census_csv_header() {
    return "kupisch,N,r,self_injective,gldim,findim,phi_dim,gustafson_d,"
           "delta_in_omega_per,checks_passed";
}

inline std::string census_csv_row(const CensusRecord& rec) {
    std::string row = "\"" + rec.kupisch + "\"";
    auto add = [&](const std::string& field) { row += "," + field; };
    add(std::to_string(rec.n));
    add(std::to_string(rec.r));
    add(rec.self_injective ? "true" : "false");
    add(rec.gldim.str());
    add(std::to_string(rec.findim));
    add(std::to_string(rec.phi_dim));
    add(std::to_string(rec.gustafson_d));
    add(rec.delta_in_omega_per ? "true" : "false");
    add(rec.checks_passed ? "true" : "false");
    return row;
}

struct CensusResult {
    std::vector<CensusRecord> records;
    CensusSummary summary;
};

/// Batch-verify every enumerated algebra. Records are computed in parallel
/// over contiguous slices and merged back in enumeration order, so the
/// output is deterministic for any worker count.
inline CensusResult run_census(const CensusParams& params) {
    std::vector<Algebra> algebras;
    for (int n = params.n_min; n <= params.n_max; ++n) {
        auto batch = enumerate_algebras(n, params.max_proj_len);
        algebras.insert(algebras.end(), batch.begin(), batch.end());
    }

    CensusResult result;
    result.records.resize(algebras.size(), CensusRecord{});
    int workers = std::max(1, params.workers);
    if (workers > 1 && algebras.size() > 1) {
        std::vector<std::thread> pool;
        std::size_t chunk = (algebras.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk;
            std::size_t hi = std::min(algebras.size(), lo + chunk);
            if (lo >= hi)
                break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    result.records[i] = census_record(algebras[i]);
            });
        }
        for (auto& t : pool)
            t.join();
    } else {
        for (std::size_t i = 0; i < algebras.size(); ++i)
            result.records[i] = census_record(algebras[i]);
    }

    CensusSummary& sum = result.summary;
    for (const CensusRecord& rec : result.records) {
        ++sum.total;
        if (rec.gldim.is_finite())
            ++sum.finite_gldim;
        else
            ++sum.infinite_gldim;
        ++sum.phi_dim_histogram[rec.phi_dim];
        if (rec.r > 0)
            sum.max_phi_over_2r =
                std::max(sum.max_phi_over_2r,
                         static_cast<double>(rec.phi_dim) / (2.0 * rec.r));
        sum.all_checks_passed = sum.all_checks_passed && rec.checks_passed;
    }

    if (!params.output_path.empty()) {
        std::string tmp = params.output_path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out)
                throw IoError("cannot open " + tmp);
            out << census_csv_header() << "\n";
            for (const CensusRecord& rec : result.records)
                out << census_csv_row(rec) << "\n";
            if (!out)
                throw IoError("write failed for " + tmp);
        }
        if (std::rename(tmp.c_str(), params.output_path.c_str()) != 0)
            throw IoError("cannot rename " + tmp + " to " + params.output_path);
    }
    return result;
}

/// The sharpness family: N-1 relations, phi_dim = findim = 2N-2.
inline Algebra sharpness_family(int n) {
    std::vector<int> series(n, 2 * n + 1);
    series[n - 1] = 2 * n;
    return Algebra::from_kupisch(n, series);
}

} // namespace nakayama
