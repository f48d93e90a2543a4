#ifndef STARFACTOR_VERIFY_HPP
#define STARFACTOR_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>

#include "starfactor/oracle.hpp"

namespace starfactor {

// Oracle-equivalence suite: every identity the engine claims, checked over an
// exhaustive small-graph corpus (plus optional random arms) against the
// brute-force references.
struct VerifyOptions {
    int n_max = 6;                 // exhaustive corpus: connected graphs up to n_max, deduped
    int random_count = 0;          // additional seeded random connected graphs
    int random_n_min = 8;
    int random_n_max = 12;
    uint64_t seed = 20240601;
    int threads = 1;
    bool critical_audit = true;    // chromatic-index based battery (the slow part)
    std::optional<std::string> cache_path;  // corpus cache: one graph6 per line
};

struct VerifyItem {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string detail;  // first failure, when any
    bool pass() const { return failed == 0; }
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    long corpus_size = 0;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass()) return false;
        return true;
    }
};

VerifyReport run_verify_suite(const VerifyOptions& opt);

// Per-graph check battery used by the suite; exposed for the acceptance tests.
struct GraphCheckResult {
    std::vector<std::pair<std::string, std::string>> failures;  // (item, detail)
    std::vector<std::pair<std::string, long>> counts;           // (item, checks run)
};
GraphCheckResult check_identities(const Graph& g, bool with_brute_factor_arms, bool critical_audit);

// Deterministic thread fan-out with ordered results; honors n_threads >= 1.
void parallel_for(long n_items, int n_threads, const std::function<void(long)>& fn);

}  // namespace starfactor

#endif
