#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "prohecke/group.hpp"

namespace prohecke {

// Environment variable that overrides the default cache directory.
inline constexpr const char* kCacheDirEnv = "PROHECKE_CACHE_DIR";

// Directory from an explicit setting, else the environment, else ".prohecke-cache".
std::filesystem::path resolve_cache_dir(const std::string& explicit_dir);

// Byte encoding of a coset table: "HKF1", n, q, the encoding of w, then one
// length-prefixed entry per representative holding the reduced numerator and
// monic denominator coefficients of every matrix entry. Integers are little endian.
std::vector<uint8_t> encode_coset_table(const ExtendedWeylElt& w, const std::vector<GroupMat>& reps);
// nullopt if the bytes are not a well-formed table for w.
std::optional<std::vector<GroupMat>> decode_coset_table(const ExtendedWeylElt& w, const std::vector<uint8_t>& bytes);

// File cache of coset_reps(w), one file per (n, q, w). Writers go through a
// temporary file and an atomic rename, so readers never see partial files.
class CosetTableCache {
public:
    explicit CosetTableCache(std::filesystem::path dir);
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const ExtendedWeylElt& w) const;

    void store(const ExtendedWeylElt& w, const std::vector<GroupMat>& reps);
    // nullopt on a missing or corrupt entry.
    std::optional<std::vector<GroupMat>> load(const ExtendedWeylElt& w) const;
    // Load, or compute and store; corrupt entries are recomputed and overwritten.
    std::vector<GroupMat> get(const ExtendedWeylElt& w);

    size_t hits() const { return hits_; }
    size_t misses() const { return misses_; }
    size_t rewrites() const { return rewrites_; }

private:
    std::filesystem::path dir_;
    std::mutex mu_;
    size_t hits_ = 0, misses_ = 0, rewrites_ = 0;
};

}  // namespace prohecke
