#pragma once

// Exact-equality suites behind `balldep verify`. Each check names the closed
// form it compares against and reports the first disagreement, if any.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace balldep {

enum class VerifySuite { Roots, Gaps, Tables, Oracle, All };

VerifySuite parse_verify_suite(std::string_view text);
std::string_view to_string(VerifySuite suite) noexcept;

struct CheckResult {
    std::string suite;
    std::string formula;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const noexcept;
    void append(const VerificationReport& other);
};

/// Default kmax per suite when the caller gives none.
std::size_t default_kmax(VerifySuite suite) noexcept;

/// Throws ResourceError when kmax exceeds the suite's guard and
/// ArgumentError when it is below 3.
VerificationReport verify(VerifySuite suite, std::size_t kmax);

VerificationReport verify_roots(std::size_t kmax);
VerificationReport verify_gaps(std::size_t kmax);
VerificationReport verify_tables(std::size_t kmax);
VerificationReport verify_oracle(std::size_t kmax);

}  // namespace balldep
