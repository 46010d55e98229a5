// Command results: a machine-readable part (params, results, named checks)
// and a flat table used by the table and csv renderers.
#ifndef HALFCUBE_TOOLS_REPORT_HPP
#define HALFCUBE_TOOLS_REPORT_HPP

#include "halfcube/numeric.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace halfcube::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& s);

/// Machine integers stay numbers; anything wider becomes a decimal string.
json to_json(const Integer& x);

struct Check {
    std::string name;
    json expected;
    json actual;
    /// "pass", "fail" or "skipped".
    std::string status;
};

struct Report {
    std::string command;
    json params = json::object();
    json results = json::object();
    std::vector<Check> checks;

    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;

    void check(std::string name, json expected, json actual);
    void skip(std::string name, json expected, std::string why);
    bool ok() const;
    /// Appends another report's checks with a name prefix.
    void absorb(const Report& other, const std::string& prefix);
};

void render(const Report& r, Format f, std::ostream& os);

} // namespace halfcube::cli

#endif
