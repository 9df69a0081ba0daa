#pragma once

#include "frobscan/kostant.hpp"
#include "frobscan/rootsys.hpp"
#include "frobscan/weyl.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobscan {

bool is_prime(std::int64_t n) noexcept;

/// Throws InvalidArgument unless p is a prime exceeding the Coxeter number.
void require_good_prime(const RootSystem& rs, std::int64_t p);

/// lambda = p * mu + w . 0 with mu dominant.
struct Decomposition {
    Weight mu;
    std::size_t w = 0;  // index into the WeylGroup
    int length = 0;     // l(w)
    std::int64_t p = 0;
};

/// Every (mu, w) with lambda = p mu + w.0 and mu dominant, sorted by l(w).
/// Requires lambda dominant and p a prime above h.
std::vector<Decomposition> decompose(const RootSystem& rs, const WeylGroup& group, const Weight& lambda,
                                     std::int64_t p);

struct DimTerm {
    std::size_t u = 0;
    int sign = 1;
    Weight argument;  // u.lambda - mu
    mpz_class value;  // P_parts(argument)
};

struct DimResult {
    Weight lambda;
    std::int64_t degree = 0;
    mpz_class dimension;
    std::optional<Decomposition> decomposition;
    std::int64_t parts = -1;     // (i - l(w)) / 2, or -1 when the sum is skipped
    std::vector<DimTerm> terms;  // one per u in W when the sum is evaluated
};

/// dim H^i(G, H^0(lambda) (x) H^0(lambda*)^(1)) as the alternating sum
///     sum_{u in W} (-1)^{l(u)} P_{(i - l(w))/2}(u.lambda - mu).
/// Zero when lambda has no decomposition or i - l(w) is odd or negative.
/// Throws AmbiguousDecomposition or NegativeDimension.
DimResult dim_frobtwist_cohomology(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                   const Weight& lambda, std::int64_t p, std::int64_t degree);

/// Same sum for a decomposition already in hand. `record_terms` keeps the
/// per-u ledger; scans switch it off.
DimResult dim_for_decomposition(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                const Weight& lambda, const Decomposition& dec, std::int64_t degree,
                                bool record_terms = true);

/// <mu, highest-root coroot>, the quantity the global degree bound is phrased in.
std::int64_t highest_coroot_pairing(const RootSystem& rs, const Weight& mu);

/// Dominant weights with <mu, highest coroot> <= bound, in a deterministic order.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, std::int64_t bound);

/// Largest <mu, highest coroot> that can contribute in degrees <= max_degree:
/// nonzero cohomology forces (p - 1) <mu, highest coroot> - 1 <= degree.
std::int64_t mu_pairing_bound(std::int64_t p, std::int64_t max_degree);

struct UpperBoundTerm {
    Weight lambda;
    Decomposition decomposition;
    mpz_class dimension;
};

struct UpperBound {
    std::int64_t p = 0;
    std::int64_t degree = 0;
    mpz_class total;
    std::vector<UpperBoundTerm> terms;  // contributing (nonzero) pairs only
    std::size_t pairs_evaluated = 0;
};

/// Upper bound on dim H^i(G(F_p), k): the sum over w with l(w) = i mod 2 and
/// dominant mu of the per-(mu, w) alternating sums. Only pairs whose
/// lambda = p mu + w.0 is dominant contribute, and mu is truncated to
/// (p - 1) <mu, highest coroot> - 1 <= i; every omitted pair has dimension 0.
UpperBound finite_group_upper_bound(const RootSystem& rs, const WeylGroup& group, PartitionTable& table,
                                    std::int64_t p, std::int64_t degree);

/// Lower bounds on a degree i with Ext^i(V(gamma2)^(1), H^0(gamma1)) != 0.
struct DegreeBound {
    std::int64_t via_sigma = 0;    // p<d2,s> - <d1,s> + l(w1) + <w2.0,s>
    std::int64_t via_highest = 0;  // p<d2,h> - <d1,h> + l(w1) - l(w2) - 1
    std::int64_t bound() const { return std::max(via_sigma, via_highest); }
};

/// Both decompositions must have nonzero mu. In G2, sigma must be long
/// (ShortRootInG2 otherwise).
DegreeBound ext_degree_bound(const RootSystem& rs, const WeylGroup& group, const Decomposition& gamma1,
                             const Decomposition& gamma2, std::size_t sigma, std::int64_t p);

struct FundamentalBound {
    mpq_class bound;                    // [2(p-1)/(n+1) - 1] j (n+1-j)
    std::vector<std::int64_t> witness;  // (p-n-1) omega_j, fundamental coordinates
};

/// Type A_n degree bound for lambda = p omega_j + w.0; equality only at the witness.
FundamentalBound fundamental_degree_bound(int n, std::int64_t p, int j);

/// Known least nonvanishing degree of H^*(G(F_q), k), q = p^r, with the
/// dimension there and the dominant weights carrying it.
struct SharpBound {
    bool covered = false;
    Family family = Family::A;
    int rank = 0;
    std::int64_t p = 0;
    int r = 1;
    std::int64_t degree = 0;
    std::int64_t dimension = 0;
    std::vector<std::vector<std::int64_t>> witnesses;  // fundamental coordinates, sorted
    std::string case_label;                            // which case of the classification applied
};

SharpBound expected_sharp_bound(Family family, int rank, std::int64_t p, int r);

}  // namespace frobscan
