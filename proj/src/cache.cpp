#include "pairlat/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pairlat {

namespace fs = std::filesystem;

Cache::Cache(bool enabled) : enabled_(enabled) {
    if (!enabled_) return;
    if (const char* dir = std::getenv("PAIRLAT_CACHE_DIR")) {
        dir_ = dir;
    } else if (const char* home = std::getenv("HOME")) {
        dir_ = std::string(home) + "/.cache/pairlat";
    } else {
        enabled_ = false;
        return;
    }
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) enabled_ = false;
}

std::string Cache::fingerprint(const std::string& content) {
    // FNV-1a, stable across runs
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::optional<std::string> Cache::get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(dir_ + "/" + fingerprint(key) + ".json");
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void Cache::put(const std::string& key, const std::string& payload) const {
    if (!enabled_) return;
    std::string path = dir_ + "/" + fingerprint(key) + ".json";
    std::ofstream out(path + ".tmp");
    if (!out) return;
    out << payload;
    out.close();
    std::error_code ec;
    fs::rename(path + ".tmp", path, ec);
}

}  // namespace pairlat
