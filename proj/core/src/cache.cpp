#include "qcong/cache.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include <unistd.h>

namespace qcong {

namespace {

constexpr char kMagic[4] = {'Q', 'S', 'E', 'R'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}
std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

std::string header(std::uint64_t modulus, long long offset, long long trunc) {
    std::string out(kMagic, 4);
    put_u32(out, kVersion);
    put_u64(out, modulus);
    put_u64(out, static_cast<std::uint64_t>(offset));
    put_u64(out, static_cast<std::uint64_t>(trunc));
    return out;
}

bool read_file(const std::filesystem::path& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return in.good() || in.eof();
}

void atomic_write(const std::filesystem::path& dir, const std::filesystem::path& final_path,
                  const std::string& data) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto tmp = final_path;
    tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return;  // cache is best-effort
        }
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace

namespace {
const SeriesCache* g_cache = nullptr;
} // namespace

void set_global_series_cache(const SeriesCache* cache) { g_cache = cache; }
const SeriesCache* global_series_cache() { return g_cache; }

SeriesCache SeriesCache::from_env() {
    const char* env = std::getenv("Q_CACHE_DIR");
    return SeriesCache(env ? std::filesystem::path(env) : std::filesystem::path(".qcache"));
}

std::string SeriesCache::sanitize_key(const std::string& key) {
    std::string out;
    for (char c : key)
        out.push_back((std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')
                          ? c : '_');
    return out + ".qser";
}

std::optional<RSeries> SeriesCache::load_residue(const std::string& key) const {
    std::string data;
    if (!read_file(dir_ / sanitize_key(key), data)) return std::nullopt;
    if (data.size() < 32 || std::memcmp(data.data(), kMagic, 4) != 0) return std::nullopt;
    const auto* p = reinterpret_cast<const unsigned char*>(data.data());
    if (get_u32(p + 4) != kVersion) return std::nullopt;
    const std::uint64_t modulus = get_u64(p + 8);
    const auto offset = static_cast<long long>(get_u64(p + 16));
    const auto trunc = static_cast<long long>(get_u64(p + 24));
    if (modulus == 0 || trunc < offset) return std::nullopt;
    const std::size_t count = static_cast<std::size_t>(trunc - offset);
    if (data.size() != 32 + 8 * count) return std::nullopt;
    RSeries s(ModRing(modulus), offset, trunc);
    for (std::size_t i = 0; i < count; ++i) s.rel(i) = get_u64(p + 32 + 8 * i);
    return s;
}

void SeriesCache::store_residue(const std::string& key, const RSeries& s) const {
    std::string data = header(s.ring().mod, s.offset(), s.trunc());
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.length()); ++i)
        put_u64(data, s.rel(i));
    atomic_write(dir_, dir_ / sanitize_key(key), data);
}

std::optional<ZSeries> SeriesCache::load_exact(const std::string& key) const {
    std::string data;
    if (!read_file(dir_ / sanitize_key(key), data)) return std::nullopt;
    if (data.size() < 32 || std::memcmp(data.data(), kMagic, 4) != 0) return std::nullopt;
    const auto* p = reinterpret_cast<const unsigned char*>(data.data());
    if (get_u32(p + 4) != kVersion || get_u64(p + 8) != 0) return std::nullopt;
    const auto offset = static_cast<long long>(get_u64(p + 16));
    const auto trunc = static_cast<long long>(get_u64(p + 24));
    if (trunc < offset) return std::nullopt;
    ZSeries s(ExactRing{}, offset, trunc);
    std::size_t pos = 32;
    for (std::size_t i = 0; i < static_cast<std::size_t>(trunc - offset); ++i) {
        if (pos + 8 > data.size()) return std::nullopt;
        const auto len = static_cast<long long>(get_u64(p + pos));
        pos += 8;
        const std::size_t mag = static_cast<std::size_t>(len < 0 ? -len : len);
        if (pos + mag > data.size()) return std::nullopt;
        mpz_class v;
        if (mag > 0)
            mpz_import(v.get_mpz_t(), mag, -1 /* LSB first */, 1, 0, 0, data.data() + pos);
        if (len < 0) v = -v;
        s.rel(i) = v;
        pos += mag;
    }
    if (pos != data.size()) return std::nullopt;
    return s;
}

void SeriesCache::store_exact(const std::string& key, const ZSeries& s) const {
    std::string data = header(0, s.offset(), s.trunc());
    std::string buf;
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.length()); ++i) {
        const mpz_class& v = s.rel(i);
        std::size_t mag = (mpz_sgn(v.get_mpz_t()) == 0) ? 0 : (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
        long long len = static_cast<long long>(mag);
        if (mpz_sgn(v.get_mpz_t()) < 0) len = -len;
        put_u64(data, static_cast<std::uint64_t>(len));
        if (mag > 0) {
            buf.resize(mag);
            std::size_t written = 0;
            mpz_export(buf.data(), &written, -1, 1, 0, 0, v.get_mpz_t());
            data.append(buf.data(), written);
        }
    }
    atomic_write(dir_, dir_ / sanitize_key(key), data);
}

} // namespace qcong
