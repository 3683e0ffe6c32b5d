#pragma once

#include <string>
#include <vector>

#include "hallforest/hecke.hpp"

namespace hallforest::verify {

using hecke::Check;

/// Result of one suite run. Deterministic given (suite, category,
/// max_degree, seed); wall time is measured by the caller and kept out of
/// the deterministic output.
struct RunReport {
    std::string suite;
    std::string category;
    int max_degree = 0;
    unsigned seed = 0;
    std::vector<Check> checks;

    bool passed() const;
    std::string to_text() const;
    std::string to_json(long long wall_ms = -1) const;  // wall_ms < 0: omit
};

const std::vector<std::string>& suite_names();

/// Runs one of: hopf, prelie, jacobi, module, duality, grading,
/// hecke-equiv, truncation, canonical, category-axioms. Throws
/// std::invalid_argument for unknown suites.
RunReport run_suite(const std::string& suite, const std::string& category, int max_degree,
                    unsigned seed);

}  // namespace hallforest::verify
