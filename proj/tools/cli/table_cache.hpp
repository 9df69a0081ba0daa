#pragma once

#include "frobscan/kostant.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace frobscan::cli {

/// Loads a partition table from the cache directory on open and writes it
/// back on save. Mismatched or corrupt files are deleted with a warning and
/// the table is rebuilt from scratch.
class TableCache {
public:
    TableCache(std::optional<std::filesystem::path> dir, std::ostream& warnings);

    void open(PartitionTable& table);
    void save(const PartitionTable& table);

private:
    std::optional<std::filesystem::path> dir_;
    std::ostream& warnings_;
    std::filesystem::path file_;
    std::size_t loaded_ = 0;
};

}  // namespace frobscan::cli
