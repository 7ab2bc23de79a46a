#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prohecke/cache.hpp"
#include "prohecke/character.hpp"
#include "prohecke/check.hpp"

namespace prohecke {

inline constexpr const char* kToolVersion = "0.1.0";

struct VerifierConfig {
    int n = 2;
    uint32_t q = 2;
    uint32_t characteristic = 2;  // 0 for Q
    uint32_t ext_degree = 1;
    std::string chi = "trivial";  // "trivial" or a character spec string
    int budget_L = 4;
    int radius = 2;
    uint64_t seed = 1;
    std::vector<std::string> checks;  // empty selects every check
    std::string cache_dir;            // empty: environment, then the default
    int jobs = 1;

    // Throw std::invalid_argument on unsupported values or a bad character spec.
    Field field() const;
    PrincipalSeriesChar character() const;
    void validate() const;
};

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct Certificate {
    std::string name;
    std::string statement;
    Status status = Status::Skipped;
    CheckResult result;
    std::vector<std::string> details;  // e.g. witness maps
    std::string reason;                // why skipped
    int64_t elapsed_ms = 0;
};

struct SuiteContext {
    const VerifierConfig& config;
    const Field& field;
    const PrincipalSeriesChar& chi;
    CosetTableCache& cache;
};

struct CheckInfo {
    std::string name;
    std::string statement;
    // Empty when the check applies to the configuration, else the skip reason.
    std::function<std::string(const VerifierConfig&)> unsupported;
    std::function<CheckResult(const SuiteContext&, std::vector<std::string>& details)> run;
};

const std::vector<CheckInfo>& check_catalog();

// Runs the selected checks; certificates are sorted by name.
std::vector<Certificate> run_suite(const VerifierConfig& config);
bool aggregate_pass(const std::vector<Certificate>& certs);

// {"schema": 1, "tool_version", "config", "certificates": [...]}; elapsed
// times are left out when with_timing is false.
std::string certificates_json(const VerifierConfig& config, const std::vector<Certificate>& certs, bool with_timing);
std::string summary_table(const std::vector<Certificate>& certs);

}  // namespace prohecke
