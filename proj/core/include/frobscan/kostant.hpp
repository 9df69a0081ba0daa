#pragma once

#include "frobscan/rootsys.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace frobscan {

/// Memoized Kostant partition function P_n(nu): the number of multisets of
/// exactly n positive roots summing to nu.
///
/// Values come from the recurrence over the ordered positive roots
///
///     count(nu, k, n) = sum_{c = 0..n} count(nu - c beta_k, k + 1, n - c),
///     count(0, ., 0) = 1,
///
/// so every memo entry is a pure function of its key. The table is safe to
/// share between threads: lookups may race with inserts, and a racing insert
/// of an already-present key keeps the first (identical) value. Tables built
/// independently per worker can be combined with merge().
class PartitionTable {
public:
    static constexpr std::string_view kRecurrenceVersion = "kostant-dp-v1";
    static constexpr std::size_t kMaxRank = 8;

    struct Key {
        std::array<std::int32_t, kMaxRank> nu{};
        std::uint32_t cutoff = 0;
        std::uint32_t parts = 0;
        bool operator==(const Key&) const = default;
        auto operator<=>(const Key&) const = default;
    };

    struct Entry {
        std::vector<std::int64_t> nu;
        std::uint32_t cutoff = 0;
        std::uint32_t parts = 0;
        mpz_class value;
    };

    explicit PartitionTable(const RootSystem& rs);
    PartitionTable(const PartitionTable&) = delete;
    PartitionTable& operator=(const PartitionTable&) = delete;

    const std::string& spec_name() const noexcept { return spec_name_; }
    const std::string& spec_hash() const noexcept { return spec_hash_; }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t num_roots() const noexcept { return roots_.size(); }

    /// P_parts(nu) for nu given by simple-root coordinates. Non-integral or
    /// negative coordinates give 0.
    mpz_class partition(const Weight& nu, std::int64_t parts);
    /// Same, for integral root coordinates.
    mpz_class partition(std::span<const std::int64_t> nu_root, std::int64_t parts);

    /// Raw recurrence value count(nu, cutoff, parts) with a 0-based cutoff.
    mpz_class count(std::span<const std::int64_t> nu_root, std::size_t cutoff, std::int64_t parts);

    std::size_t size() const;
    void clear();
    /// Sorted copy of all memo entries.
    std::vector<Entry> snapshot() const;
    /// Inserts an entry without recomputing it; used by cache loading.
    void insert(const Entry& entry);
    /// Copies every entry of `other` not already present.
    void merge(const PartitionTable& other);

private:
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<Key, mpz_class, KeyHash> map;
    };
    static constexpr std::size_t kShards = 32;

    mpz_class recurse(std::array<std::int32_t, kMaxRank>& nu, std::int64_t height, std::size_t cutoff,
                      std::int64_t parts);
    Shard& shard_for(const Key& key) const;
    bool lookup(const Key& key, mpz_class& out) const;
    void store(const Key& key, const mpz_class& value);

    std::string spec_name_;
    std::string spec_hash_;
    std::size_t rank_ = 0;
    std::vector<std::array<std::int32_t, kMaxRank>> roots_;
    std::vector<std::int64_t> heights_;
    std::int64_t max_height_ = 0;
    std::unique_ptr<Shard[]> shards_;
};

/// Default cap on the number of parts accepted by the brute-force oracle.
inline constexpr std::int64_t kOracleDefaultCap = 12;

/// Independent oracle: enumerates every nondecreasing sequence of `parts`
/// root indices and counts those summing to nu. Throws OracleTooLarge when
/// parts > cap or height(nu) > cap * height(highest root).
mpz_class partition_bruteforce(const RootSystem& rs, const Weight& nu, std::int64_t parts,
                               std::int64_t cap = kOracleDefaultCap);

/// All P_parts values at once: one pass over the multisets of size `parts`,
/// keyed by integer root coordinates of the sum.
std::map<std::vector<std::int64_t>, mpz_class> partition_bruteforce_histogram(const RootSystem& rs,
                                                                             std::int64_t parts,
                                                                             std::int64_t cap = kOracleDefaultCap);

}  // namespace frobscan
