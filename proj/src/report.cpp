#include <splitlab/report.hpp>

#include <algorithm>
#include <ostream>

namespace splitlab {

void Report::expect(std::string name, std::int64_t expected, std::int64_t actual)
{
    checks_.push_back({std::move(name), expected, actual});
}

void Report::append(const Report& other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const
{
    return failures() == 0;
}

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass(); }));
}

std::string format_check(const Check& c)
{
    return c.name + ": expected=" + std::to_string(c.expected) + " actual=" + std::to_string(c.actual)
        + " status=" + (c.pass() ? "PASS" : "FAIL");
}

void write_report(std::ostream& out, const Report& r)
{
    for (const auto& c : r.checks())
        out << format_check(c) << '\n';
}

} // namespace splitlab
