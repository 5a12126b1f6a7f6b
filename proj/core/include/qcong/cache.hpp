#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qcong/series.hpp"

namespace qcong {

// One file per key. Little-endian fixed-width residues behind a 32-byte
// header (magic "QSER", version, modulus, offset, trunc); exact-mode series
// as length-prefixed big-integer byte arrays. Writes are
// write-temp-then-rename.
class SeriesCache {
public:
    // Empty directory disables the cache.
    explicit SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    // Directory from Q_CACHE_DIR, defaulting to ".qcache".
    static SeriesCache from_env();

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<RSeries> load_residue(const std::string& key) const;
    void store_residue(const std::string& key, const RSeries& s) const;

    std::optional<ZSeries> load_exact(const std::string& key) const;
    void store_exact(const std::string& key, const ZSeries& s) const;

    template <class Fn>
    RSeries residue(const std::string& key, Fn&& compute) const {
        if (enabled())
            if (auto hit = load_residue(key)) return *hit;
        RSeries s = compute();
        if (enabled()) store_residue(key, s);
        return s;
    }

    static std::string sanitize_key(const std::string& key);

private:
    std::filesystem::path dir_;
};

// Process-wide cache consulted by the expensive series constructors
// (partition_r_series). Null (the default) disables caching there.
void set_global_series_cache(const SeriesCache* cache);
const SeriesCache* global_series_cache();

} // namespace qcong
