#pragma once

#include "frobscan/kostant.hpp"

#include <filesystem>
#include <string>

namespace frobscan {

/// On-disk format of a persisted PartitionTable. A JSON document:
///
///     { "format": "frobscan-kostant-cache", "format_version": 1,
///       "recurrence": "kostant-dp-v1", "system": "A3", "spec_hash": "...",
///       "entries": [ [[nu...], cutoff, parts, "count"], ... ] }
///
/// Counts are decimal strings. Loading refuses (CacheMismatch) a file whose
/// format version, recurrence version, system, or spec hash differ from the
/// table, and reports anything unparsable as CacheCorrupt.
inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheFormatName = "frobscan-kostant-cache";

std::string cache_file_name(const PartitionTable& table);

void save_partition_table(const PartitionTable& table, const std::filesystem::path& path);

/// Returns the number of entries loaded.
std::size_t load_partition_table(PartitionTable& table, const std::filesystem::path& path);

}  // namespace frobscan
