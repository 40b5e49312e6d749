#include "qorb/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qorb/json_io.hpp"

namespace qorb {

namespace {

std::filesystem::path cache_path(const std::string& file) {
    const char* dir = std::getenv("QORB_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::filesystem::path(dir) / file;
}

bool read_json(const std::string& file, json& j) {
    auto p = cache_path(file);
    if (p.empty() || !std::filesystem::exists(p)) return false;
    try {
        std::ifstream in(p);
        j = json::parse(in);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void write_json(const std::string& file, const json& j) {
    auto p = cache_path(file);
    if (p.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
    }
    std::filesystem::rename(tmp, p, ec);
}

}  // namespace

bool load_cached_rep(const std::string& file, Rep& r) {
    json j;
    if (!read_json(file, j)) return false;
    try {
        r = rep_from_json(j);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void store_cached_rep(const std::string& file, const Rep& r) {
    if (!cache_path(file).empty()) write_json(file, to_json(r));
}

bool load_cached_blocks(const std::string& file, std::vector<IntertwinerBlock>& blocks) {
    json j;
    if (!read_json(file, j)) return false;
    try {
        blocks.clear();
        for (const auto& b : j) blocks.push_back(block_from_json(b));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void store_cached_blocks(const std::string& file, const std::vector<IntertwinerBlock>& blocks) {
    if (cache_path(file).empty()) return;
    json j = json::array();
    for (const auto& b : blocks) j.push_back(to_json(b));
    write_json(file, j);
}

}  // namespace qorb
