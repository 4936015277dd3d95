/**
 * Seeded verification suites over the whole identity stack: q-number
 * combinatorics, the border iteration rule, Leibnitz/Newton expansions of
 * the convex product, tail formulas, augmentation, the homotopy-operator
 * identity, the coefficient table, and pair/triple exactness. Each suite is
 * deterministic in (N, trials, seed) and lists failing cases verbatim.
 */

#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qhom {

struct CaseFailure {
    std::string id;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    long order = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    long total = 0;
    long failed = 0;
    std::vector<CaseFailure> failures;
    std::vector<std::string> notes;

    SuiteResult() = default;
    SuiteResult(std::string suite_in, long order_in, long trials_in, std::uint64_t seed_in)
        : suite(std::move(suite_in)), order(order_in), trials(trials_in), seed(seed_in) {}

    bool pass() const { return failed == 0; }
    void record(const std::string& id, bool ok, const std::string& detail);
};

SuiteResult suite_qnumbers(long order, long trials, std::uint64_t seed);
SuiteResult suite_iteration(long order, long trials, std::uint64_t seed);
SuiteResult suite_leibnitz(long order, long trials, std::uint64_t seed);
SuiteResult suite_newton(long order, long trials, std::uint64_t seed);
SuiteResult suite_tails(long order, long trials, std::uint64_t seed);
SuiteResult suite_homotopy(long order, long trials, std::uint64_t seed);
SuiteResult suite_augmentation(long order, long trials, std::uint64_t seed);
SuiteResult suite_coeff_table(long order);
SuiteResult suite_exactness(long order);

/// Names: qnumbers, iteration, leibnitz, newton, tails, homotopy,
/// augmentation, coeff-table, exactness, all. Throws on unknown names.
std::vector<SuiteResult> run_suites(const std::string& name, long order, long trials, std::uint64_t seed);

nlohmann::ordered_json suite_result_to_json(const SuiteResult& r);

}  // namespace qhom
