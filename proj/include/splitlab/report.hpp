#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace splitlab {

struct Check {
    std::string name;
    std::int64_t expected;
    std::int64_t actual;

    bool pass() const { return expected == actual; }
};

/// Ordered list of exact integer checks.
class Report {
public:
    void expect(std::string name, std::int64_t expected, std::int64_t actual);
    void expect_true(std::string name, bool actual) { expect(std::move(name), 1, actual ? 1 : 0); }
    void append(const Report& other);

    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const;
    std::size_t failures() const;

private:
    std::vector<Check> checks_;
};

/// `<name>: expected=<int> actual=<int> status=<PASS|FAIL>`
std::string format_check(const Check& c);
void write_report(std::ostream& out, const Report& r);

} // namespace splitlab
