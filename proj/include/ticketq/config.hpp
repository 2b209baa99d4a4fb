#pragma once

#include <map>
#include <string>
#include <vector>

namespace ticketq {

/// Line-oriented `key = value` config with optional `[section]` headers (one
/// section per run) and `#` comments. Parse errors carry the line number.
struct ConfigSection {
    std::string name;  // empty for the implicit top section
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
};

struct ConfigFile {
    std::vector<ConfigSection> sections;  // first entry is the top section
};

/// Throws std::invalid_argument with "file:line: message" on malformed input.
ConfigFile parse_config(const std::string& path);
ConfigFile parse_config_text(const std::string& text, const std::string& origin);

}  // namespace ticketq
