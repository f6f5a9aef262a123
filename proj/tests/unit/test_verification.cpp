#include <doctest.h>

#include "balldep/errors.hpp"
#include "balldep/verification.hpp"

using namespace balldep;

TEST_CASE("suite names") {
    for (const auto s : {VerifySuite::Roots, VerifySuite::Gaps, VerifySuite::Tables, VerifySuite::Oracle,
                         VerifySuite::All}) {
        CHECK(parse_verify_suite(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_verify_suite("some"), ArgumentError);
}

TEST_CASE("every suite passes at its default size") {
    const auto report = verify(VerifySuite::All, 0);
    CHECK(report.checks.size() > 30);
    for (const auto& c : report.checks) {
        INFO(c.suite << ": " << c.formula << " -- " << c.detail);
        CHECK(c.passed);
    }
    CHECK(report.all_passed());
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(verify(VerifySuite::Roots, 2), ArgumentError);
    CHECK_THROWS_AS(verify(VerifySuite::Oracle, 11), ResourceError);
    CHECK_THROWS_AS(verify(VerifySuite::Gaps, 1000), ResourceError);
    CHECK_THROWS_AS(verify(VerifySuite::Roots, 100000), ResourceError);
}

TEST_CASE("reports combine") {
    VerificationReport a, b;
    a.checks.push_back({"x", "f", true, ""});
    b.checks.push_back({"y", "g", false, "first mismatch"});
    CHECK(a.all_passed());
    a.append(b);
    CHECK(a.checks.size() == 2);
    CHECK_FALSE(a.all_passed());
}
