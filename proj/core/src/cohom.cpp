#include "frobscan/cohom.hpp"

#include "frobscan/error.hpp"

#include <algorithm>
#include <functional>

namespace frobscan {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_good_prime(const RootSystem& rs, std::int64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
    if (p <= rs.coxeter_number())
        throw Error(ErrorCode::InvalidArgument, "p = " + std::to_string(p) + " must exceed the Coxeter number " +
                                                    std::to_string(rs.coxeter_number()) + " of " + rs.name());
}

namespace {

void require_degree(std::int64_t degree) {
    if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
}

std::vector<std::int64_t> w_dot_zero(const RootSystem& rs, const WeylElement& w) {
    std::vector<std::int64_t> zero(rs.rank(), 0), out(rs.rank());
    dot_action_fund(rs, w, zero, out);
    return out;
}

}  // namespace

std::vector<Decomposition> decompose(const RootSystem& rs, const WeylGroup& group, const Weight& lambda,
                                     std::int64_t p) {
    require_good_prime(rs, p);
    if (!rs.is_dominant(lambda)) throw Error(ErrorCode::InvalidArgument, lambda.to_string() + " is not dominant");

    const std::size_t n = rs.rank();
    std::vector<Decomposition> out;
    std::vector<std::int64_t> zero(n, 0), wz(n), mu(n);
    for (const auto& w : group.elements()) {
        dot_action_fund(rs, w, zero, wz);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const std::int64_t diff = lambda.fund(i) - wz[i];
            ok = diff >= 0 && diff % p == 0;
            mu[i] = diff / p;
        }
        if (ok) out.push_back({rs.weight_from_fund(mu), w.index, w.length, p});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Decomposition& a, const Decomposition& b) { return a.length < b.length; });
    return out;
}

DimResult dim_for_decomposition(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                const Weight& lambda, const Decomposition& dec, std::int64_t degree,
                                bool record_terms) {
    require_degree(degree);
    DimResult result;
    result.lambda = lambda;
    result.degree = degree;
    result.decomposition = dec;
    result.dimension = 0;

    const std::int64_t rest = degree - dec.length;
    if (rest < 0 || rest % 2 != 0) return result;
    result.parts = rest / 2;

    const std::size_t n = rs.rank();
    const IntMatrix& adj = rs.inv_cartan_times_det();
    const std::int64_t det = rs.cartan_det();
    std::vector<std::int64_t> arg(n), root(n);

    for (const auto& u : group.elements()) {
        dot_action_fund(rs, u, lambda.fund(), arg);
        for (std::size_t i = 0; i < n; ++i) arg[i] = detail::checked_add(arg[i], -dec.mu.fund(i));

        bool integral = true;
        bool nonnegative = true;
        for (std::size_t j = 0; j < n && integral; ++j) {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc = detail::checked_add(acc, detail::checked_mul(adj(j, i), arg[i]));
            integral = acc % det == 0;
            root[j] = acc / det;
            nonnegative = nonnegative && root[j] >= 0;
        }

        mpz_class value = 0;
        if (integral && nonnegative) value = table.partition(root, result.parts);
        if (u.sign > 0)
            result.dimension += value;
        else
            result.dimension -= value;
        if (record_terms) result.terms.push_back({u.index, u.sign, rs.weight_from_fund(arg), value});
    }

    if (result.dimension < 0)
        throw Error(ErrorCode::NegativeDimension, "alternating sum for " + lambda.to_string() + " in degree " +
                                                      std::to_string(degree) + " is " + result.dimension.get_str());
    return result;
}

DimResult dim_frobtwist_cohomology(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                   const Weight& lambda, std::int64_t p, std::int64_t degree) {
    require_degree(degree);
    const auto decs = decompose(rs, group, lambda, p);
    if (decs.size() > 1)
        throw Error(ErrorCode::AmbiguousDecomposition,
                    lambda.to_string() + " has " + std::to_string(decs.size()) + " decompositions at p = " +
                        std::to_string(p));
    if (decs.empty()) {
        DimResult result;
        result.lambda = lambda;
        result.degree = degree;
        result.dimension = 0;
        return result;
    }
    return dim_for_decomposition(rs, group, table, lambda, decs.front(), degree);
}

std::int64_t highest_coroot_pairing(const RootSystem& rs, const Weight& mu) {
    return rs.pairing(mu, rs.highest_root_index());
}

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, std::int64_t bound) {
    std::vector<Weight> out;
    if (bound < 0) return out;
    const auto d = rs.coroot_coefficients(rs.highest_root_index());
    const std::size_t n = rs.rank();
    std::vector<std::int64_t> mu(n, 0);
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t left) {
        if (i == n) {
            out.push_back(rs.weight_from_fund(mu));
            return;
        }
        for (std::int64_t c = 0; c * d[i] <= left; ++c) {
            mu[i] = c;
            fill(i + 1, left - c * d[i]);
        }
        mu[i] = 0;
    };
    fill(0, bound);
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        return highest_coroot_pairing(rs, a) < highest_coroot_pairing(rs, b);
    });
    return out;
}

std::int64_t mu_pairing_bound(std::int64_t p, std::int64_t max_degree) {
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
    if (max_degree < 0) return -1;
    return (max_degree + 1) / (p - 1);
}

UpperBound finite_group_upper_bound(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                    std::int64_t p, std::int64_t degree) {
    require_good_prime(rs, p);
    require_degree(degree);

    UpperBound ub;
    ub.p = p;
    ub.degree = degree;
    ub.total = 0;

    std::vector<std::vector<std::int64_t>> shifts;
    for (const auto& w : group.elements()) shifts.push_back(w_dot_zero(rs, w));

    const std::size_t n = rs.rank();
    std::vector<std::int64_t> lam(n);
    for (const auto& mu : dominant_weights_up_to(rs, mu_pairing_bound(p, degree))) {
        for (const auto& w : group.elements()) {
            if (w.length > degree || (degree - w.length) % 2 != 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                lam[i] = detail::checked_add(detail::checked_mul(p, mu.fund(i)), shifts[w.index][i]);
            if (std::any_of(lam.begin(), lam.end(), [](std::int64_t x) { return x < 0; })) continue;
            const Weight lambda = rs.weight_from_fund(lam);
            const Decomposition dec{mu, w.index, w.length, p};
            ++ub.pairs_evaluated;
            auto r = dim_for_decomposition(rs, group, table, lambda, dec, degree, false);
            if (r.dimension != 0) {
                ub.total += r.dimension;
                ub.terms.push_back({lambda, dec, r.dimension});
            }
        }
    }
    return ub;
}

DegreeBound ext_degree_bound(const RootSystem& rs, const WeylGroup& group, const Decomposition& gamma1,
                             const Decomposition& gamma2, std::size_t sigma, std::int64_t p) {
    if (sigma >= rs.num_positive_roots()) throw Error(ErrorCode::InvalidArgument, "root index out of range");
    if (gamma1.mu.is_zero() || gamma2.mu.is_zero())
        throw Error(ErrorCode::InvalidArgument, "both dominant parts must be nonzero");
    if (rs.spec().family == Family::G && !rs.is_long(sigma))
        throw Error(ErrorCode::ShortRootInG2, "sigma must be a long root in G2");

    const Weight w2_zero = dot_action(rs, group[gamma2.w], rs.zero());
    const std::size_t h = rs.highest_root_index();

    DegreeBound b;
    b.via_sigma = p * rs.pairing(gamma2.mu, sigma) - rs.pairing(gamma1.mu, sigma) + gamma1.length +
                  rs.pairing(w2_zero, sigma);
    b.via_highest = p * rs.pairing(gamma2.mu, h) - rs.pairing(gamma1.mu, h) + gamma1.length - gamma2.length - 1;
    return b;
}

FundamentalBound fundamental_degree_bound(int n, std::int64_t p, int j) {
    if (n < 1) throw Error(ErrorCode::InvalidRank, "rank must be positive");
    if (j < 1 || j > n) throw Error(ErrorCode::InvalidArgument, "j must lie in 1..n");
    if (!is_prime(p) || p <= n + 1)
        throw Error(ErrorCode::InvalidArgument, "p must be a prime exceeding n + 1");

    FundamentalBound fb;
    fb.bound = (mpq_class(2 * (p - 1), n + 1) - 1) * (static_cast<long>(j) * (n + 1 - j));
    fb.bound.canonicalize();
    fb.witness.assign(static_cast<std::size_t>(n), 0);
    fb.witness[static_cast<std::size_t>(j - 1)] = p - n - 1;
    return fb;
}

namespace {

std::vector<std::int64_t> fund_vector(int n, std::initializer_list<std::pair<int, std::int64_t>> entries) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (const auto& [i, c] : entries) v[static_cast<std::size_t>(i - 1)] += c;
    return v;
}

void settle(SharpBound& s, std::int64_t degree, std::int64_t dimension,
            std::vector<std::vector<std::int64_t>> witnesses, std::string label) {
    s.covered = true;
    s.degree = degree;
    s.dimension = dimension;
    std::sort(witnesses.begin(), witnesses.end());
    s.witnesses = std::move(witnesses);
    s.case_label = std::move(label);
}

// q - 1 mod 3 for q = p^r.
bool three_divides_q_minus_one(std::int64_t p, int r) {
    std::int64_t q = 1;
    for (int k = 0; k < r; ++k) q = (q * (p % 3)) % 3;
    return q == 1;
}

}  // namespace

SharpBound expected_sharp_bound(Family family, int rank, std::int64_t p, int r) {
    SharpBound s;
    s.family = family;
    s.rank = rank;
    s.p = p;
    s.r = r;
    validate({family, rank});
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
    if (!is_prime(p)) {
        s.case_label = "p is not prime";
        return s;
    }

    const int n = rank;
    if (family == Family::C || (family == Family::A && n == 1)) {
        if (p <= 2 * n) {
            s.case_label = "type C_n needs p > 2n";
            return s;
        }
        settle(s, r * (p - 2), 1, {fund_vector(n, {{1, p - 2 * n}})}, "C_n, p > 2n");
        return s;
    }
    if (family != Family::A) {
        s.case_label = "no sharp bound known for type " + std::string(1, family_letter(family));
        return s;
    }

    if (r == 1) {
        if (p <= n + 1) {
            s.case_label = "type A_n needs p > n + 1";
            return s;
        }
        if (p == n + 2) {
            settle(s, p - 2, 2, {fund_vector(n, {{1, 1}}), fund_vector(n, {{n, 1}})}, "A_n, p = n + 2");
        } else if (n == 2 && (p - 1) % 3 == 0) {
            settle(s, 2 * p - 6, 2, {fund_vector(n, {{1, p - 3}}), fund_vector(n, {{2, p - 3}})},
                   "A_2, 3 divides p - 1");
        } else if (n == 2) {
            settle(s, 2 * p - 3, 1, {fund_vector(n, {{1, p - 2}, {2, p - 2}})}, "A_2, 3 does not divide p - 1");
        } else if (n == 3) {
            settle(s, 2 * p - 6, 1, {fund_vector(n, {{2, p - 4}})}, "A_3, p > 5");
        } else {
            settle(s, 2 * p - 3, 1, {fund_vector(n, {{1, p - n}, {n, p - n}})}, "A_n, n > 3, p > n + 2");
        }
        return s;
    }

    if (p <= 2 * (n + 1)) {
        s.case_label = "type A_n over F_{p^r}, r > 1, needs p > 2(n + 1)";
        return s;
    }
    const std::int64_t rr = r;
    if (n == 2 && three_divides_q_minus_one(p, r)) {
        settle(s, rr * (2 * p - 6), 2, {fund_vector(n, {{1, p - 3}}), fund_vector(n, {{2, p - 3}})},
               "A_2, r > 1, 3 divides q - 1");
    } else if (n == 2) {
        settle(s, rr * (2 * p - 3), 1, {fund_vector(n, {{1, p - 2}, {2, p - 2}})},
               "A_2, r > 1, 3 does not divide q - 1");
    } else if (n == 3) {
        settle(s, rr * (2 * p - 6), 1, {fund_vector(n, {{2, p - 4}})}, "A_3, r > 1");
    } else {
        settle(s, rr * (2 * p - 3), 1, {fund_vector(n, {{1, p - n}, {n, p - n}})}, "A_n, n > 3, r > 1");
    }
    return s;
}

}  // namespace frobscan
