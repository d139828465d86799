#pragma once

// Random configuration generators with genericity certification, the
// theorem-verification suites, and the conjecture-falsification scans.
// Everything is a pure function of (spec, seed).

#include <cstdint>
#include <string>
#include <vector>

#include "acm/io.hpp"

namespace acm {

enum class Pattern { Random, Star, Inclusion, AB };

struct GenSpec {
    FactorShape shape;
    Pattern pattern = Pattern::Random;
    int points = 6;  // point budget (patterns stay at or below it)
    std::uint64_t seed = 1;
    std::uint64_t prime = kDefaultPrime;
    // AB pattern parameters.
    int n0 = 2;
    int n1 = 1;
    int levels = 2;
    bool intersect_allowed = false;
    // Star pattern: explicit corner profile (i descending, j ascending);
    // drawn randomly when empty.
    std::vector<std::pair<int, int>> corners;
};

ConfigData generate(const GenSpec& spec);

struct CaseFailure {
    int index = 0;
    std::uint64_t seed = 0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    int cases = 0;
    int passed = 0;
    int failed = 0;
    std::vector<CaseFailure> failures;
    double wall_ms = 0;
};

// Suite ids: lemma-3.4, prop-3.2, thm-decomposition, thm-star-acm,
// lemma-4.5, thm-4.7, thm-4.8, examples. The examples suite always runs
// its three fixed assertions.
SuiteReport verify(const std::string& suite, int cases, std::uint64_t seed);

struct ScanBudget {
    int cases = 30;
    int max_points = 12;
    int max_ambient_vars = 9;
};

// Conjecture ids: conj-3.9 (inclusion implies ACM in general products),
// conj-4.10 (converse of the D-membership sufficiency). A counterexample
// candidate fails the suite only after it reproduces over the rationals.
SuiteReport scan(const std::string& conjecture, const ScanBudget& budget, std::uint64_t seed);

const std::vector<std::string>& verify_suite_names();
const std::vector<std::string>& scan_conjecture_names();

}  // namespace acm
