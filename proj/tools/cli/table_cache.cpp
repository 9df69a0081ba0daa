#include "table_cache.hpp"

#include "frobscan/error.hpp"
#include "frobscan/kostant_cache.hpp"

#include <ostream>

namespace frobscan::cli {

TableCache::TableCache(std::optional<std::filesystem::path> dir, std::ostream& warnings)
    : dir_(std::move(dir)), warnings_(warnings) {}

void TableCache::open(PartitionTable& table) {
    if (!dir_) return;
    file_ = *dir_ / cache_file_name(table);
    std::error_code ec;
    if (!std::filesystem::exists(file_, ec)) return;
    try {
        loaded_ = load_partition_table(table, file_);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CacheMismatch && e.code() != ErrorCode::CacheCorrupt) throw;
        warnings_ << "warning: discarding cache " << file_.string() << ": " << e.what() << "; recomputing\n";
        table.clear();
        loaded_ = 0;
        std::filesystem::remove(file_, ec);
    }
}

void TableCache::save(const PartitionTable& table) {
    if (!dir_ || table.size() == loaded_) return;
    try {
        save_partition_table(table, file_);
        loaded_ = table.size();
    } catch (const std::exception& e) {
        warnings_ << "warning: could not write cache " << file_.string() << ": " << e.what() << '\n';
    }
}

}  // namespace frobscan::cli
