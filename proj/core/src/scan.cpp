#include "frobscan/scan.hpp"

#include "frobscan/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace frobscan {

Workspace::Workspace(const RootSystemSpec& spec, std::size_t group_cap)
    : rs(RootSystem::build(spec)),
      group(WeylGroup::enumerate(rs, group_cap)),
      table(std::make_unique<PartitionTable>(rs)) {}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::NotCovered: return "NOT_COVERED";
    }
    return "?";
}

std::vector<Candidate> enumerate_candidates(const RootSystem& rs, const WeylGroup& group, std::int64_t p,
                                            std::int64_t i_max) {
    require_good_prime(rs, p);
    const std::size_t n = rs.rank();

    std::vector<std::vector<std::int64_t>> shifts;
    std::vector<std::int64_t> zero(n, 0), wz(n);
    for (const auto& w : group.elements()) {
        dot_action_fund(rs, w, zero, wz);
        shifts.push_back(wz);
    }

    std::map<std::vector<std::int64_t>, Candidate> found;
    std::vector<std::int64_t> lam(n);
    for (const auto& mu : dominant_weights_up_to(rs, mu_pairing_bound(p, i_max))) {
        for (const auto& w : group.elements()) {
            bool dominant = true;
            for (std::size_t i = 0; i < n; ++i) {
                lam[i] = detail::checked_add(detail::checked_mul(p, mu.fund(i)), shifts[w.index][i]);
                dominant = dominant && lam[i] >= 0;
            }
            if (!dominant) continue;
            Candidate c{rs.weight_from_fund(lam), {mu, w.index, w.length, p}};
            const auto [it, inserted] = found.emplace(lam, c);
            if (!inserted)
                throw Error(ErrorCode::AmbiguousDecomposition,
                            c.lambda.to_string() + " has more than one decomposition at p = " + std::to_string(p));
        }
    }

    std::vector<Candidate> out;
    out.reserve(found.size());
    for (auto& [key, c] : found) out.push_back(std::move(c));
    std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
        return rs.height(a.lambda) < rs.height(b.lambda);
    });
    return out;
}

namespace {

// Runs body(worker, item) for item in [0, count) on `jobs` threads and rethrows
// the first failure after all workers stop.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(0u, k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> threads;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            try {
                for (std::size_t k = next++; k < count && !failed; k = next++) body(t, k);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        });
    }
    threads.clear();
    if (error) std::rethrow_exception(error);
}

}  // namespace

Verdict judge(const ScanReport& report, const SharpBound& expected) {
    if (!expected.covered) return Verdict::NotCovered;
    if (!report.least_degree || *report.least_degree != expected.degree) return Verdict::Mismatch;
    if (report.least_degree_dimension != expected.dimension) return Verdict::Mismatch;
    std::vector<std::vector<std::int64_t>> found;
    for (const auto& w : report.witnesses) found.emplace_back(w.lambda.fund().begin(), w.lambda.fund().end());
    std::sort(found.begin(), found.end());
    return found == expected.witnesses ? Verdict::Match : Verdict::Mismatch;
}

ScanReport vanishing_scan(const RootSystem& rs, const WeylGroup& group, PartitionTable& table, std::int64_t p,
                          std::int64_t i_max, const ScanOptions& options) {
    require_good_prime(rs, p);
    if (i_max < 1) throw Error(ErrorCode::InvalidArgument, "i_max must be positive");

    ScanReport report;
    report.spec = rs.spec();
    report.p = p;
    report.i_max = i_max;
    report.early_exit = options.early_exit;

    const auto candidates = enumerate_candidates(rs, group, p, i_max);
    report.candidates = candidates.size();

    const unsigned jobs = std::max(1u, options.jobs);
    std::vector<std::unique_ptr<PartitionTable>> own;
    if (options.memo == MemoMode::PerWorker)
        for (unsigned t = 0; t < jobs; ++t) own.push_back(std::make_unique<PartitionTable>(rs));
    auto table_for = [&](unsigned worker) -> PartitionTable& {
        return options.memo == MemoMode::PerWorker ? *own[worker] : table;
    };

    std::vector<mpz_class> dims(candidates.size());
    for (std::int64_t degree = 1; degree <= i_max; ++degree) {
        parallel_for(candidates.size(), jobs, [&](unsigned worker, std::size_t k) {
            const auto& c = candidates[k];
            dims[k] = dim_for_decomposition(rs, group, table_for(worker), c.lambda, c.decomposition, degree, false)
                          .dimension;
        });
        report.pairs_checked += candidates.size();
        report.last_degree_scanned = degree;

        bool any = false;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            if (dims[k] == 0) continue;
            any = true;
            report.nonzero.push_back({candidates[k].lambda, degree, dims[k], candidates[k].decomposition});
        }
        if (any && !report.least_degree) {
            report.least_degree = degree;
            report.least_degree_dimension = 0;
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                if (dims[k] == 0) continue;
                report.least_degree_dimension += dims[k];
                report.witnesses.push_back(dim_for_decomposition(rs, group, table_for(0), candidates[k].lambda,
                                                                 candidates[k].decomposition, degree, true));
            }
        }
        if (any && options.early_exit) break;
    }

    for (const auto& t : own) table.merge(*t);

    report.expected = expected_sharp_bound(rs.spec().family, static_cast<int>(rs.rank()), p, 1);
    report.verdict = judge(report, report.expected);
    return report;
}

void check_desk_caps(const RootSystemSpec& spec, std::int64_t p, const DeskCaps& caps) {
    validate(spec);
    switch (spec.family) {
        case Family::A:
            if (spec.rank > caps.max_rank_a)
                throw Error(ErrorCode::CapExceeded,
                            spec.name() + " exceeds the type A rank cap " + std::to_string(caps.max_rank_a));
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            if (spec.rank > caps.max_rank_bcd)
                throw Error(ErrorCode::CapExceeded,
                            spec.name() + " exceeds the rank cap " + std::to_string(caps.max_rank_bcd));
            break;
        case Family::G:
        case Family::F: break;
    }
    if (p > caps.max_p)
        throw Error(ErrorCode::CapExceeded, "p = " + std::to_string(p) + " exceeds the cap " + std::to_string(caps.max_p));
}

ScanReport verify_theorem(Workspace& ws, std::int64_t p, int r, const ScanOptions& options, const DeskCaps& caps) {
    const auto& spec = ws.rs.spec();
    const auto expected = expected_sharp_bound(spec.family, spec.rank, p, r);
    if (!expected.covered)
        throw Error(ErrorCode::NotCovered, spec.name() + " at p = " + std::to_string(p) + ": " + expected.case_label);
    if (r != 1)
        throw Error(ErrorCode::NotCovered, "only r = 1 can be scanned; r > 1 has reference values only");
    check_desk_caps(spec, p, caps);

    auto report = vanishing_scan(ws.rs, ws.group, *ws.table, p, expected.degree + 2, options);
    report.expected = expected;
    report.verdict = judge(report, expected);
    return report;
}

ScanReport verify_theorem(Family family, int rank, std::int64_t p, int r, const ScanOptions& options) {
    Workspace ws({family, rank});
    return verify_theorem(ws, p, r, options);
}

namespace {

mpz_class alternating_sum(const RootSystem& rs, const WeylGroup& group, PartitionTable& table, const Weight& lambda,
                          const Weight& mu, std::int64_t parts, const std::vector<std::size_t>& elements,
                          std::vector<SumTerm>* terms) {
    mpz_class sum = 0;
    for (std::size_t index : elements) {
        const auto& u = group[index];
        const Weight arg = dot_action(rs, u, lambda) - mu;
        const mpz_class value = table.partition(arg, parts);
        if (u.sign > 0)
            sum += value;
        else
            sum -= value;
        if (terms && value != 0) terms->push_back({index, u.sign, arg, value});
    }
    return sum;
}

std::vector<std::size_t> all_elements(const WeylGroup& group) {
    std::vector<std::size_t> out(group.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
    return out;
}

}  // namespace

A3Omega2Sum check_a3_omega2_sum(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                std::int64_t p) {
    if (rs.spec() != RootSystemSpec{Family::A, 3}) throw Error(ErrorCode::InvalidArgument, "the A3 omega_2 sum needs A3");
    if (!is_prime(p) || p <= 4) throw Error(ErrorCode::InvalidArgument, "p must be a prime greater than 4");
    A3Omega2Sum out;
    out.p = p;
    const Weight& w2 = rs.fundamental_weight(1);
    out.sum = alternating_sum(rs, group, table, w2 * (p - 4), w2, p - 5, all_elements(group), &out.terms);
    out.pass = out.sum == 1;
    return out;
}

A4Omega2Sums check_a4_omega2_sums(const RootSystem& rs, const WeylGroup& group, PartitionTable& table) {
    if (rs.spec() != RootSystemSpec{Family::A, 4}) throw Error(ErrorCode::InvalidArgument, "the A4 omega_2 sums need A4");
    A4Omega2Sums out;
    const Weight& w2 = rs.fundamental_weight(1);
    const auto all = all_elements(group);
    out.sum_a = alternating_sum(rs, group, table, w2 * 6, w2, 6, all, nullptr);
    out.sum_b = alternating_sum(rs, group, table, w2 * 6 + rs.highest_root(), w2, 7, all, nullptr);
    const auto stab = stabilizer(rs, group, w2);
    out.stabilizer_size = stab.size();
    out.stabilizer_sum_a = alternating_sum(rs, group, table, w2 * 6, w2, 6, stab, nullptr);
    out.pass = out.sum_a == 0 && out.sum_b == 0;
    return out;
}

}  // namespace frobscan
