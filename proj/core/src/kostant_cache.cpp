#include "frobscan/kostant_cache.hpp"

#include "frobscan/error.hpp"

#include <json.hpp>

#include <fstream>

namespace frobscan {

using nlohmann::json;

std::string cache_file_name(const PartitionTable& table) {
    return "kostant-" + table.spec_name() + "-" + table.spec_hash() + ".json";
}

void save_partition_table(const PartitionTable& table, const std::filesystem::path& path) {
    json doc;
    doc["format"] = kCacheFormatName;
    doc["format_version"] = kCacheFormatVersion;
    doc["recurrence"] = std::string(PartitionTable::kRecurrenceVersion);
    doc["system"] = table.spec_name();
    doc["spec_hash"] = table.spec_hash();
    json entries = json::array();
    for (const auto& e : table.snapshot()) entries.push_back(json::array({e.nu, e.cutoff, e.parts, e.value.get_str()}));
    doc["entries"] = std::move(entries);

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    // Write to a sibling file first so a crash never leaves a truncated cache behind.
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache file " + tmp.string());
        out << doc.dump() << '\n';
        if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::size_t load_partition_table(PartitionTable& table, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::CacheCorrupt, "cannot open cache file " + path.string());

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CacheCorrupt, path.string() + ": " + e.what());
    }

    try {
        if (doc.at("format").get<std::string>() != kCacheFormatName)
            throw Error(ErrorCode::CacheMismatch, path.string() + ": not a partition cache");
        const int version = doc.at("format_version").get<int>();
        if (version != kCacheFormatVersion)
            throw Error(ErrorCode::CacheMismatch, path.string() + ": format version " + std::to_string(version) +
                                                      ", expected " + std::to_string(kCacheFormatVersion));
        const auto recurrence = doc.at("recurrence").get<std::string>();
        if (recurrence != PartitionTable::kRecurrenceVersion)
            throw Error(ErrorCode::CacheMismatch, path.string() + ": recurrence " + recurrence + ", expected " +
                                                      std::string(PartitionTable::kRecurrenceVersion));
        const auto system = doc.at("system").get<std::string>();
        const auto hash = doc.at("spec_hash").get<std::string>();
        if (system != table.spec_name() || hash != table.spec_hash())
            throw Error(ErrorCode::CacheMismatch, path.string() + ": cache is for " + system + " (" + hash +
                                                      "), table is " + table.spec_name() + " (" +
                                                      table.spec_hash() + ")");

        // Parse everything before touching the table so a corrupt file inserts nothing.
        std::vector<PartitionTable::Entry> entries;
        for (const auto& row : doc.at("entries")) {
            if (!row.is_array() || row.size() != 4) throw Error(ErrorCode::CacheCorrupt, "malformed entry");
            PartitionTable::Entry e;
            e.nu = row[0].get<std::vector<std::int64_t>>();
            e.cutoff = row[1].get<std::uint32_t>();
            e.parts = row[2].get<std::uint32_t>();
            const auto text = row[3].get<std::string>();
            if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorCode::CacheCorrupt, "malformed count '" + text + "'");
            e.value = mpz_class(text, 10);
            if (e.nu.size() != table.rank() || e.cutoff >= table.num_roots())
                throw Error(ErrorCode::CacheCorrupt, "entry outside the table's key space");
            entries.push_back(std::move(e));
        }
        for (const auto& e : entries) table.insert(e);
        return entries.size();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CacheCorrupt, path.string() + ": " + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CacheMismatch || e.code() == ErrorCode::CacheCorrupt) throw;
        throw Error(ErrorCode::CacheCorrupt, path.string() + ": " + e.what());
    }
}

}  // namespace frobscan
