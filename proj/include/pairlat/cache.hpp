#pragma once

#include <optional>
#include <string>

namespace pairlat {

// On-disk JSON cache keyed by strings; misses never change results.  The
// directory comes from PAIRLAT_CACHE_DIR (default ~/.cache/pairlat); a
// disabled cache reads and writes nothing.
class Cache {
public:
    explicit Cache(bool enabled);
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;
    bool enabled() const { return enabled_; }

    static std::string fingerprint(const std::string& content);  // stable 64-bit hex

private:
    bool enabled_;
    std::string dir_;
};

}  // namespace pairlat
