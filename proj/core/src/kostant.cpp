#include "frobscan/kostant.hpp"

#include "frobscan/error.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace frobscan {

namespace {

using Coords = std::array<std::int32_t, PartitionTable::kMaxRank>;

}  // namespace

std::size_t PartitionTable::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t{k.cutoff} << 32) ^ k.parts;
    for (std::int32_t x : k.nu) {
        h ^= static_cast<std::uint32_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
}

PartitionTable::PartitionTable(const RootSystem& rs)
    : spec_name_(rs.name()),
      spec_hash_(rs.spec_hash()),
      rank_(rs.rank()),
      shards_(std::make_unique<Shard[]>(kShards)) {
    if (rank_ > kMaxRank)
        throw Error(ErrorCode::CapExceeded, "partition table supports rank <= " + std::to_string(kMaxRank));
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        Coords beta{};
        const auto v = rs.root_vector(k);
        for (std::size_t j = 0; j < rank_; ++j) beta[j] = static_cast<std::int32_t>(v[j]);
        roots_.push_back(beta);
        heights_.push_back(rs.root_height(k));
    }
    max_height_ = heights_.back();
}

PartitionTable::Shard& PartitionTable::shard_for(const Key& key) const {
    return shards_[KeyHash{}(key) % kShards];
}

bool PartitionTable::lookup(const Key& key, mpz_class& out) const {
    Shard& s = shard_for(key);
    std::shared_lock lock(s.mutex);
    const auto it = s.map.find(key);
    if (it == s.map.end()) return false;
    out = it->second;
    return true;
}

void PartitionTable::store(const Key& key, const mpz_class& value) {
    Shard& s = shard_for(key);
    std::unique_lock lock(s.mutex);
    s.map.emplace(key, value);
}

mpz_class PartitionTable::partition(const Weight& nu, std::int64_t parts) {
    if (nu.rank() != rank_) throw Error(ErrorCode::InvalidArgument, "weight rank does not match the table");
    if (!nu.root_integral()) return 0;
    const auto coords = nu.root_integers();
    return partition(coords, parts);
}

mpz_class PartitionTable::partition(std::span<const std::int64_t> nu_root, std::int64_t parts) {
    return count(nu_root, 0, parts);
}

mpz_class PartitionTable::count(std::span<const std::int64_t> nu_root, std::size_t cutoff, std::int64_t parts) {
    if (nu_root.size() != rank_) throw Error(ErrorCode::InvalidArgument, "coordinate count does not match rank");
    if (parts < 0) return 0;
    Coords nu{};
    std::int64_t height = 0;
    for (std::size_t j = 0; j < rank_; ++j) {
        if (nu_root[j] < 0) return 0;
        if (nu_root[j] > INT32_MAX) throw Error(ErrorCode::Overflow, "root coordinate too large for the table");
        nu[j] = static_cast<std::int32_t>(nu_root[j]);
        height += nu_root[j];
    }
    if (parts > UINT32_MAX) throw Error(ErrorCode::Overflow, "part count too large for the table");
    return recurse(nu, height, cutoff, parts);
}

mpz_class PartitionTable::recurse(Coords& nu, std::int64_t height, std::size_t cutoff, std::int64_t parts) {
    if (parts == 0) return height == 0 ? 1 : 0;
    const std::size_t n_roots = roots_.size();
    if (cutoff >= n_roots) return 0;
    if (height < parts * heights_[cutoff] || height > parts * max_height_) return 0;
    if (cutoff + 1 == n_roots) {
        const Coords& beta = roots_[cutoff];
        for (std::size_t j = 0; j < rank_; ++j)
            if (nu[j] != parts * beta[j]) return 0;
        return 1;
    }

    const Key key{nu, static_cast<std::uint32_t>(cutoff), static_cast<std::uint32_t>(parts)};
    mpz_class total;
    if (lookup(key, total)) return total;

    total = 0;
    const Coords& beta = roots_[cutoff];
    std::int64_t taken = 0;
    for (std::int64_t c = 0; c <= parts; ++c) {
        if (c > 0) {
            bool ok = true;
            for (std::size_t j = 0; j < rank_; ++j) ok = ok && nu[j] >= beta[j];
            if (!ok) break;
            for (std::size_t j = 0; j < rank_; ++j) nu[j] -= beta[j];
            height -= heights_[cutoff];
            ++taken;
        }
        total += recurse(nu, height, cutoff + 1, parts - c);
    }
    for (std::size_t j = 0; j < rank_; ++j) nu[j] += static_cast<std::int32_t>(taken) * beta[j];

    store(key, total);
    return total;
}

std::size_t PartitionTable::size() const {
    std::size_t n = 0;
    for (std::size_t s = 0; s < kShards; ++s) {
        std::shared_lock lock(shards_[s].mutex);
        n += shards_[s].map.size();
    }
    return n;
}

void PartitionTable::clear() {
    for (std::size_t s = 0; s < kShards; ++s) {
        std::unique_lock lock(shards_[s].mutex);
        shards_[s].map.clear();
    }
}

std::vector<PartitionTable::Entry> PartitionTable::snapshot() const {
    std::vector<std::pair<Key, mpz_class>> raw;
    for (std::size_t s = 0; s < kShards; ++s) {
        std::shared_lock lock(shards_[s].mutex);
        raw.insert(raw.end(), shards_[s].map.begin(), shards_[s].map.end());
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Entry> out;
    out.reserve(raw.size());
    for (const auto& [key, value] : raw) {
        Entry e;
        e.nu.assign(key.nu.begin(), key.nu.begin() + static_cast<std::ptrdiff_t>(rank_));
        e.cutoff = key.cutoff;
        e.parts = key.parts;
        e.value = value;
        out.push_back(std::move(e));
    }
    return out;
}

void PartitionTable::insert(const Entry& entry) {
    if (entry.nu.size() != rank_) throw Error(ErrorCode::InvalidArgument, "entry rank does not match the table");
    if (entry.cutoff >= roots_.size()) throw Error(ErrorCode::InvalidArgument, "entry cutoff out of range");
    if (entry.value < 0) throw Error(ErrorCode::InvalidArgument, "negative partition count");
    Key key;
    for (std::size_t j = 0; j < rank_; ++j) {
        if (entry.nu[j] < 0 || entry.nu[j] > INT32_MAX)
            throw Error(ErrorCode::InvalidArgument, "entry coordinate out of range");
        key.nu[j] = static_cast<std::int32_t>(entry.nu[j]);
    }
    key.cutoff = entry.cutoff;
    key.parts = entry.parts;
    store(key, entry.value);
}

void PartitionTable::merge(const PartitionTable& other) {
    if (other.spec_hash_ != spec_hash_) throw Error(ErrorCode::InvalidArgument, "cannot merge tables of different systems");
    if (&other == this) return;
    for (std::size_t s = 0; s < kShards; ++s) {
        std::shared_lock lock(other.shards_[s].mutex);
        for (const auto& [key, value] : other.shards_[s].map) store(key, value);
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

void check_oracle_caps(const RootSystem& rs, std::int64_t parts, std::int64_t cap) {
    if (parts < 0) throw Error(ErrorCode::InvalidArgument, "negative part count");
    if (parts > cap)
        throw Error(ErrorCode::OracleTooLarge,
                    "brute force limited to " + std::to_string(cap) + " parts, asked for " + std::to_string(parts));
    (void)rs;
}

// Visits every nondecreasing sequence of `parts` root indices with the running sum.
void enumerate_multisets(const RootSystem& rs, std::int64_t parts,
                         const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    const std::size_t n = rs.rank();
    const std::size_t roots = rs.num_positive_roots();
    std::vector<std::int64_t> sum(n, 0);
    std::function<void(std::size_t, std::int64_t)> step = [&](std::size_t first, std::int64_t left) {
        if (left == 0) {
            visit(sum);
            return;
        }
        for (std::size_t k = first; k < roots; ++k) {
            const auto beta = rs.root_vector(k);
            for (std::size_t j = 0; j < n; ++j) sum[j] += beta[j];
            step(k, left - 1);
            for (std::size_t j = 0; j < n; ++j) sum[j] -= beta[j];
        }
    };
    step(0, parts);
}

}  // namespace

mpz_class partition_bruteforce(const RootSystem& rs, const Weight& nu, std::int64_t parts, std::int64_t cap) {
    check_oracle_caps(rs, parts, cap);
    if (rs.height(nu) > mpq_class(cap * rs.root_height(rs.highest_root_index())))
        throw Error(ErrorCode::OracleTooLarge, "weight too high for the brute-force oracle");
    if (!nu.root_integral()) return 0;
    const auto target = nu.root_integers();
    std::uint64_t hits = 0;
    enumerate_multisets(rs, parts, [&](const std::vector<std::int64_t>& sum) {
        if (sum == target) ++hits;
    });
    return mpz_class(static_cast<unsigned long>(hits));
}

std::map<std::vector<std::int64_t>, mpz_class> partition_bruteforce_histogram(const RootSystem& rs,
                                                                             std::int64_t parts,
                                                                             std::int64_t cap) {
    check_oracle_caps(rs, parts, cap);
    std::map<std::vector<std::int64_t>, std::uint64_t> counts;
    enumerate_multisets(rs, parts, [&](const std::vector<std::int64_t>& sum) { ++counts[sum]; });
    std::map<std::vector<std::int64_t>, mpz_class> out;
    for (const auto& [k, v] : counts) out.emplace(k, mpz_class(static_cast<unsigned long>(v)));
    return out;
}

}  // namespace frobscan
