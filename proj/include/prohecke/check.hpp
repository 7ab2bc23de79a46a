#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace prohecke {

// Outcome of an exact verification: observed dimensions and ranks, and the
// first violated condition if any.
struct CheckResult {
    bool pass = true;
    std::vector<std::pair<std::string, int64_t>> observed;
    std::string witness;

    void record(const std::string& key, int64_t value) { observed.emplace_back(key, value); }
    // Returns cond; the first failure is kept as the witness.
    bool expect(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            witness = what;
        }
        return cond;
    }
    void merge(const CheckResult& o, const std::string& prefix = "") {
        for (const auto& [k, v] : o.observed) observed.emplace_back(prefix + k, v);
        expect(o.pass, prefix + o.witness);
    }
    int64_t get(const std::string& key) const {
        for (const auto& [k, v] : observed)
            if (k == key) return v;
        return -1;
    }
};

}  // namespace prohecke
