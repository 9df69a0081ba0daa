#pragma once

#include "frobscan/cohom.hpp"
#include "frobscan/kostant.hpp"
#include "frobscan/rootsys.hpp"
#include "frobscan/weyl.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace frobscan {

/// Root system, Weyl group and partition table for one spec, built together.
struct Workspace {
    explicit Workspace(const RootSystemSpec& spec, std::size_t group_cap = WeylGroup::kDefaultCap);

    RootSystem rs;
    WeylGroup group;
    std::unique_ptr<PartitionTable> table;
};

struct Candidate {
    Weight lambda;
    Decomposition decomposition;
};

/// Every dominant lambda = p mu + w.0 with (p - 1) <mu, highest coroot> - 1 <= i_max,
/// ordered by height then fundamental coordinates. Throws AmbiguousDecomposition
/// if two pairs produce the same lambda.
std::vector<Candidate> enumerate_candidates(const RootSystem& rs, const WeylGroup& group, std::int64_t p,
                                            std::int64_t i_max);

enum class MemoMode {
    Shared,     // all workers fill the caller's table
    PerWorker,  // each worker fills its own table; merged into the caller's afterwards
};

struct ScanOptions {
    unsigned jobs = 1;
    bool early_exit = false;
    MemoMode memo = MemoMode::Shared;
};

enum class Verdict { Match, Mismatch, NotCovered };

std::string to_string(Verdict v);

struct ScanHit {
    Weight lambda;
    std::int64_t degree = 0;
    mpz_class dimension;
    Decomposition decomposition;
};

struct ScanReport {
    RootSystemSpec spec;
    std::int64_t p = 0;
    std::int64_t i_max = 0;
    std::int64_t last_degree_scanned = 0;
    bool early_exit = false;

    std::optional<std::int64_t> least_degree;  // empty: nothing nonzero in 0 < i <= i_max
    mpz_class least_degree_dimension;          // total over the witnesses
    std::vector<DimResult> witnesses;          // full per-u ledgers at the least degree
    std::vector<ScanHit> nonzero;              // every nonzero (lambda, i) scanned, by degree then candidate

    std::size_t candidates = 0;
    std::uint64_t pairs_checked = 0;

    SharpBound expected;
    Verdict verdict = Verdict::NotCovered;
};

/// dim_frobtwist_cohomology for every candidate lambda and every 0 < i <= i_max,
/// in ascending degree. The report is identical for any worker count or memo mode.
ScanReport vanishing_scan(const RootSystem& rs, const WeylGroup& group, PartitionTable& table, std::int64_t p,
                          std::int64_t i_max, const ScanOptions& options = {});

inline std::int64_t default_i_max(std::int64_t p) { return 2 * p - 2; }

/// Compares a finished scan with the reference record.
Verdict judge(const ScanReport& report, const SharpBound& expected);

struct DeskCaps {
    int max_rank_a = 6;
    int max_rank_bcd = 4;
    std::int64_t max_p = 31;
};

/// Throws CapExceeded when (spec, p) is outside the desk-scale limits.
void check_desk_caps(const RootSystemSpec& spec, std::int64_t p, const DeskCaps& caps = {});

/// Runs a scan up to the expected degree + 2 and records the verdict. Throws
/// NotCovered outside the classification and for r > 1.
ScanReport verify_theorem(Workspace& ws, std::int64_t p, int r = 1, const ScanOptions& options = {},
                          const DeskCaps& caps = {});
ScanReport verify_theorem(Family family, int rank, std::int64_t p, int r = 1, const ScanOptions& options = {});

struct SumTerm {
    std::size_t u = 0;
    int sign = 1;
    Weight argument;
    mpz_class value;
};

/// sum_{u in W} (-1)^{l(u)} P_{p-5}(u.((p-4) omega_2) - omega_2) on A3.
struct A3Omega2Sum {
    std::int64_t p = 0;
    mpz_class sum;
    bool pass = false;
    std::vector<SumTerm> terms;  // nonzero terms only
};

A3Omega2Sum check_a3_omega2_sum(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                std::int64_t p);

/// On A4 at p = 11:
///   sum_a = sum_{u in W} (-1)^{l(u)} P_6(u.(6 omega_2) - omega_2)
///   sum_b = sum_{u in W} (-1)^{l(u)} P_7(u.(6 omega_2 + highest root) - omega_2)
/// plus sum_a restricted to the stabilizer of omega_2.
struct A4Omega2Sums {
    mpz_class sum_a;
    mpz_class sum_b;
    mpz_class stabilizer_sum_a;
    std::size_t stabilizer_size = 0;
    bool pass = false;
};

A4Omega2Sums check_a4_omega2_sums(const RootSystem& rs, const WeylGroup& group, PartitionTable& table);

}  // namespace frobscan
