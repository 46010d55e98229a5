#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace halfcube::cli {

Format parse_format(const std::string& s)
{
    if (s == "table")
        return Format::Table;
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

json to_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

void Report::check(std::string name, json expected, json actual)
{
    const bool pass = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), pass ? "pass" : "fail"});
}

void Report::skip(std::string name, json expected, std::string why)
{
    checks.push_back({std::move(name), std::move(expected), std::move(why), "skipped"});
}

bool Report::ok() const
{
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
}

void Report::absorb(const Report& other, const std::string& prefix)
{
    for (const auto& c : other.checks)
        checks.push_back({prefix + "/" + c.name, c.expected, c.actual, c.status});
}

namespace {

std::string cell_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_line(std::ostream& os, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? "," : "") << csv_escape(cells[i]);
    os << "\n";
}

} // namespace

void render(const Report& r, Format f, std::ostream& os)
{
    if (f == Format::Json) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"status", c.status}});
        const json doc = {{"schema_version", kSchemaVersion},
                          {"command", r.command},
                          {"params", r.params},
                          {"results", r.results},
                          {"checks", checks}};
        os << doc.dump(2) << "\n";
        return;
    }
    if (f == Format::Csv) {
        if (!r.header.empty()) {
            csv_line(os, r.header);
            for (const auto& row : r.rows)
                csv_line(os, row);
            os << "\n";
        }
        csv_line(os, {"check", "expected", "actual", "status"});
        for (const auto& c : r.checks)
            csv_line(os, {c.name, cell_text(c.expected), cell_text(c.actual), c.status});
        return;
    }

    std::vector<std::size_t> width(r.header.size(), 0);
    for (std::size_t i = 0; i < r.header.size(); ++i)
        width[i] = r.header[i].size();
    for (const auto& row : r.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
        os << "\n";
    };
    if (!r.header.empty()) {
        line(r.header);
        for (const auto& row : r.rows)
            line(row);
        os << "\n";
    }
    for (const auto& n : r.notes)
        os << n << "\n";
    std::size_t failed = 0, skipped = 0;
    for (const auto& c : r.checks) {
        if (c.status == "pass")
            continue;
        (c.status == "fail" ? failed : skipped) += 1;
        os << (c.status == "fail" ? "FAIL " : "SKIP ") << c.name << ": expected " << cell_text(c.expected)
           << ", got " << cell_text(c.actual) << "\n";
    }
    os << r.checks.size() << " checks, " << failed << " failed, " << skipped << " skipped: "
       << (failed ? "MISMATCH" : "MATCH") << "\n";
}

} // namespace halfcube::cli
