#include "ticketq/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ticketq {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw std::invalid_argument(os.str());
}

}  // namespace

std::string ConfigSection::get(const std::string& key, const std::string& fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

double ConfigSection::get_double(const std::string& key, double fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size())
        throw std::invalid_argument("config key `" + key + "`: not a number: " + it->second);
    return v;
}

long long ConfigSection::get_int(const std::string& key, long long fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::size_t pos = 0;
    long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size())
        throw std::invalid_argument("config key `" + key + "`: not an integer: " + it->second);
    return v;
}

ConfigFile parse_config_text(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    cfg.sections.push_back({"", {}});
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, lineno, "unterminated section header");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) fail(origin, lineno, "empty section name");
            cfg.sections.push_back({name, {}});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected `key = value`");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, lineno, "empty key");
        if (value.empty()) fail(origin, lineno, "empty value for key `" + key + "`");
        if (cfg.sections.back().values.count(key))
            fail(origin, lineno, "duplicate key `" + key + "`");
        cfg.sections.back().values[key] = value;
    }
    return cfg;
}

ConfigFile parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

}  // namespace ticketq
