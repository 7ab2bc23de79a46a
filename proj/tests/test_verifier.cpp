#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "doctest.h"
#include "json.hpp"
#include "prohecke/suite.hpp"

#include <unistd.h>

using namespace prohecke;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    auto p = fs::temp_directory_path() / ("prohecke-test-" + std::to_string(::getpid()) + "-" + name);
    fs::remove_all(p);
    return p;
}

std::vector<uint8_t> read_bytes(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

ExtendedWeylElt sample_elt() { return ExtendedWeylElt::translation(3, {0, 1}) * ExtendedWeylElt::simple(2, 3, 1); }

}  // namespace

TEST_CASE("coset table store then load is the identity") {
    auto dir = fresh_dir("roundtrip");
    CosetTableCache cache(dir);
    const auto w = sample_elt();
    const auto reps = coset_reps(w);
    cache.store(w, reps);
    auto loaded = cache.load(w);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == reps);
    CHECK(encode_coset_table(w, *loaded) == read_bytes(cache.path_for(w)));
    // a second store writes the same bytes
    const auto before = read_bytes(cache.path_for(w));
    cache.store(w, reps);
    CHECK(read_bytes(cache.path_for(w)) == before);
    CHECK(std::string(before.begin(), before.begin() + 4) == "HKF1");
    fs::remove_all(dir);
}

TEST_CASE("cache hits, misses and corrupt entries") {
    auto dir = fresh_dir("hits");
    CosetTableCache cache(dir);
    const auto w = sample_elt();
    const auto a = cache.get(w);
    CHECK(cache.misses() == 1);
    const auto b = cache.get(w);
    CHECK(cache.hits() == 1);
    CHECK(a == b);
    // flip a byte in the last entry, then truncate: both are recomputed and overwritten
    auto bytes = read_bytes(cache.path_for(w));
    bytes[bytes.size() - 3] ^= 1;
    std::ofstream(cache.path_for(w), std::ios::binary).write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    CHECK(cache.get(w) == a);
    CHECK(cache.rewrites() == 1);
    bytes.resize(bytes.size() / 2);
    std::ofstream(cache.path_for(w), std::ios::binary).write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    CHECK(cache.get(w) == a);
    CHECK(cache.rewrites() == 2);
    CHECK(cache.load(w).has_value());
    fs::remove_all(dir);
}

TEST_CASE("decoder rejects tables for another element") {
    const auto w = sample_elt();
    const auto bytes = encode_coset_table(w, coset_reps(w));
    CHECK(decode_coset_table(w, bytes).has_value());
    CHECK_FALSE(decode_coset_table(ExtendedWeylElt::simple(2, 3, 1), bytes).has_value());
    CHECK_FALSE(decode_coset_table(w, {}).has_value());
}

TEST_CASE("cache directory resolution") {
    CHECK(resolve_cache_dir("/x") == fs::path("/x"));
    ::setenv(kCacheDirEnv, "/from-env", 1);
    CHECK(resolve_cache_dir("") == fs::path("/from-env"));
    CHECK(resolve_cache_dir("/x") == fs::path("/x"));
    ::unsetenv(kCacheDirEnv);
    CHECK(resolve_cache_dir("") == fs::path(".prohecke-cache"));
}

TEST_CASE("default configuration passes every check") {
    VerifierConfig c;
    c.cache_dir = fresh_dir("default").string();
    auto certs = run_suite(c);
    CHECK(certs.size() == check_catalog().size());
    for (const auto& cert : certs) {
        CAPTURE(cert.name);
        CAPTURE(cert.result.witness);
        CHECK(cert.status == Status::Pass);
    }
    for (size_t i = 1; i < certs.size(); ++i) CHECK(certs[i - 1].name < certs[i].name);
    CHECK(aggregate_pass(certs));
    fs::remove_all(c.cache_dir);
}

TEST_CASE("char k = p at q = 3 passes every check") {
    VerifierConfig c;
    c.q = 3;
    c.characteristic = 3;
    c.chi = "z=[1,2];tame=[1,0]";
    c.cache_dir = fresh_dir("charp").string();
    c.jobs = 3;
    auto certs = run_suite(c);
    for (const auto& cert : certs) {
        CAPTURE(cert.name);
        CAPTURE(cert.result.witness);
        CHECK(cert.status == Status::Pass);
    }
    fs::remove_all(c.cache_dir);
}

TEST_CASE("single invariant dimension check for n = 3") {
    VerifierConfig c;
    c.n = 3;
    c.characteristic = 0;
    c.checks = {"invariant_dimension"};
    c.cache_dir = fresh_dir("n3").string();
    auto certs = run_suite(c);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].status == Status::Pass);
    CHECK(certs[0].result.get("rank_I") == 6);
    CHECK(certs[0].result.get("dim_I") == 6);
}

TEST_CASE("tree checks are skipped for n = 3") {
    VerifierConfig c;
    c.n = 3;
    c.checks = {"ball_exactness", "facet_orbit_decomposition"};
    auto certs = run_suite(c);
    REQUIRE(certs.size() == 2);
    for (const auto& cert : certs) {
        CHECK(cert.status == Status::Skipped);
        CHECK_FALSE(cert.reason.empty());
    }
    CHECK(aggregate_pass(certs));
}

TEST_CASE("invalid configurations") {
    VerifierConfig c;
    c.chi = "z=[0,1]";
    CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
    c.chi = "z=[1,1];tame=[1,0]";  // no nontrivial tame character in F_2 for q = 3
    c.q = 3;
    CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
    VerifierConfig d;
    d.checks = {"no_such_check"};
    CHECK_THROWS_AS(run_suite(d), std::invalid_argument);
    VerifierConfig e;
    e.n = 4;
    CHECK_THROWS_AS(run_suite(e), std::invalid_argument);
}

TEST_CASE("certificate JSON") {
    VerifierConfig c;
    c.checks = {"fiber_isomorphism", "apartment_stabilizer"};
    c.cache_dir = fresh_dir("json").string();
    auto certs = run_suite(c);
    auto doc = nlohmann::json::parse(certificates_json(c, certs, true));
    CHECK(doc["schema"] == 1);
    CHECK(doc["aggregate"] == "pass");
    REQUIRE(doc["certificates"].size() == 2);
    CHECK(doc["certificates"][0]["name"] == "apartment_stabilizer");
    CHECK(doc["certificates"][1]["details"].size() == 2);
    CHECK(doc["certificates"][1]["observed"]["upper"] == 2);
    CHECK(doc["certificates"][1].contains("elapsed_ms"));
    auto bare = nlohmann::json::parse(certificates_json(c, certs, false));
    CHECK_FALSE(bare["certificates"][1].contains("elapsed_ms"));
    // failing budget is reported with a witness
    c.budget_L = 1;
    c.checks = {"fiber_isomorphism"};
    auto fail = run_suite(c);
    CHECK(fail[0].status == Status::Fail);
    CHECK_FALSE(aggregate_pass(fail));
    CHECK(nlohmann::json::parse(certificates_json(c, fail, false))["certificates"][0].contains("witness"));
}

TEST_CASE("certificates do not depend on parallelism") {
    VerifierConfig c;
    c.q = 3;
    c.characteristic = 0;
    c.chi = "z=[2,3];tame=[1,1]";
    c.cache_dir = fresh_dir("jobs").string();
    const auto serial = certificates_json(c, run_suite(c), false);
    c.jobs = 4;
    CHECK(certificates_json(c, run_suite(c), false) == serial);
    fs::remove_all(c.cache_dir);
}
