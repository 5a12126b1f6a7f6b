#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "qcong/cache.hpp"
#include "qcong/forms.hpp"

using namespace qcong;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qcong-cache-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("key sanitization") {
    CHECK(SeriesCache::sanitize_key("pr_r3_N100_mod49") == "pr_r3_N100_mod49.qser");
    CHECK(SeriesCache::sanitize_key("a/b c!") == "a_b_c_.qser");
}

TEST_CASE("residue series round-trip, including negative offsets") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10; ++i) {
        long long offset = static_cast<long long>(rng() % 11) - 5;
        long long len = 1 + static_cast<long long>(rng() % 200);
        RSeries s(ModRing(161051), offset, offset + len);
        for (long long n = offset; n < offset + len; ++n) s.set(n, rng() % 161051);
        std::string key = "roundtrip_" + std::to_string(i);
        cache.store_residue(key, s);
        auto back = cache.load_residue(key);
        REQUIRE(back.has_value());
        CHECK(back->offset() == s.offset());
        CHECK(back->trunc() == s.trunc());
        CHECK(back->ring().mod == 161051);
        CHECK(series_equal(*back, s));
    }
}

TEST_CASE("exact series round-trip with signed big coefficients") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    ZSeries s(ExactRing{}, -3, 6);
    s.set(-3, mpz_class("-987654321987654321987654321"));
    s.set(0, mpz_class(0));
    s.set(2, mpz_class("123456789123456789123456789123456789"));
    s.set(5, mpz_class(-1));
    cache.store_exact("exact_case", s);
    auto back = cache.load_exact("exact_case");
    REQUIRE(back.has_value());
    CHECK(back->offset() == -3);
    CHECK(back->trunc() == 6);
    for (long long n = -3; n < 6; ++n) CHECK(back->coeff(n) == s.coeff(n));
}

TEST_CASE("mode confusion is rejected") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    RSeries r(ModRing(25), 0, 4);
    cache.store_residue("modal", r);
    CHECK_FALSE(cache.load_exact("modal").has_value());
    ZSeries z(ExactRing{}, 0, 4);
    cache.store_exact("modal_z", z);
    CHECK_FALSE(cache.load_residue("modal_z").has_value());
}

TEST_CASE("corrupt or missing files are treated as misses") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    CHECK_FALSE(cache.load_residue("never_written").has_value());

    RSeries s = partition_r_series(2, 50, Modulus(5, 2));
    cache.store_residue("corrupt_me", s);
    auto file = tmp.path / SeriesCache::sanitize_key("corrupt_me");
    std::filesystem::resize_file(file, 20);  // chop inside the header
    CHECK_FALSE(cache.load_residue("corrupt_me").has_value());

    std::ofstream(file, std::ios::binary) << "not a cache file at all";
    CHECK_FALSE(cache.load_residue("corrupt_me").has_value());
}

TEST_CASE("compute-through helper and the disabled cache") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    int calls = 0;
    auto make = [&] {
        ++calls;
        return partition_r_series(3, 120, Modulus(7, 1));
    };
    RSeries a = cache.residue("pr3", make);
    RSeries b = cache.residue("pr3", make);
    CHECK(calls == 1);  // second call is a hit
    CHECK(series_equal(a, b));

    SeriesCache off{std::filesystem::path()};
    CHECK_FALSE(off.enabled());
    (void)off.residue("pr3", make);
    (void)off.residue("pr3", make);
    CHECK(calls == 3);  // disabled cache recomputes every time
}

TEST_CASE("cached and uncached computations are bit-identical") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    auto make = [] { return partition_r_series(5, 400, Modulus(11, 2)); };
    RSeries direct = make();
    RSeries first = cache.residue("pr5", make);   // populates
    RSeries second = cache.residue("pr5", make);  // loads
    for (long long n = 0; n < 400; ++n) {
        CHECK(first.coeff(n) == direct.coeff(n));
        CHECK(second.coeff(n) == direct.coeff(n));
    }
}
