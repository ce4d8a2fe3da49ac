#pragma once

// Verification suites behind `verify --suite ...` and the acceptance runner:
// named checks with machine-readable reports.

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace dwpf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    nlohmann::json to_json() const;  // checks sorted by name
    std::string to_text() const;
};

// Korepin's four conditions at seeded random points (N <= 6).
SuiteReport run_korepin_suite(int n, std::uint64_t seed);

// Fock pairing of every lambda-ordered monomial state in the (N-1)^N box
// against (-1)^{sum b_i} chi_lambda(t), exact polynomial equality (N <= 4).
SuiteReport run_boson_fermion_suite(int n, std::uint64_t seed);

// Minor/coefficient agreement, the named N=3 relations, all admissible
// two-hook and multi-hook relations, Laplace fuzzing, and the vanishing of
// sigma-sequence parameter choices. N <= 5.
SuiteReport run_plucker_suite(int n, std::uint64_t seed);

// The proportionality between the fermionic expectation value and the tau
// polynomial: exact polynomial identity (N <= 4) plus restricted comparison
// against brute force (N <= 5).
SuiteReport run_main_suite(int n, std::uint64_t seed);

// Four-way agreement at seeded points: brute force versus the kappa-scaled
// Izergin, Lascoux and Schur-expansion routes (N <= 5).
SuiteReport run_agreement_suite(int n, std::uint64_t seed, int points = 5);

// suite in {korepin, boson-fermion, plucker, main, all}; throws
// std::invalid_argument on anything else.
std::vector<SuiteReport> run_suites(const std::string& suite, int n, std::uint64_t seed);

}  // namespace dwpf
