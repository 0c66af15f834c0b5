#pragma once

#include <string>
#include <vector>

namespace swg {

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<SuiteFailure> failures;
    double wall_seconds = 0;

    bool passed() const { return failures.empty(); }
};

// Named verification suites, one per identity the library is built around:
//   duality        RSK*(rev w) = (P^t, evac(Q^t)), exhaustive n <= 6, k <= 3
//   focus          c_a via deletion schedules vs direct enumeration
//   shape          Q(rev(psi(u))) = Q(rev(u)) and sh(w_S) = sh(phi(T,S))
//   vandermonde    permutation convolution of Vandermonde determinants
//   dims           three dimension computations agree, |lambda| <= 12
//   densities      normalized row/column lengths vs sorted densities
//   thoma          shape-cylinder sums vs Thoma cylinder values
//   mixed-duality  Q(dagger w) transposes; Greene invariant cross-check
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);
std::vector<SuiteResult> run_all_suites();

}  // namespace swg
