#include "logbloch/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace logbloch {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        const std::string t = trim(cur);
        if (!t.empty()) parts.push_back(t);
    }
    return parts;
}

double parse_real(const std::string& s, bool& ok) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        ok = pos == s.size();
        return v;
    } catch (const std::exception&) {
        ok = false;
        return 0.0;
    }
}

long parse_int(const std::string& s, bool& ok) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos, 10);
        ok = pos == s.size();
        return v;
    } catch (const std::exception&) {
        ok = false;
        return 0;
    }
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3) {
                throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                         ": malformed section header: " + t);
            }
            section = trim(t.substr(1, t.size() - 2));
            cfg.data_[section];
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected key = value: " + t);
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        cfg.data_[section][key] = value;
    }
    return cfg;
}

const std::string* Config::find(const std::string& section, const std::string& key) const {
    const auto sit = data_.find(section);
    if (sit == data_.end()) return nullptr;
    const auto kit = sit->second.find(key);
    if (kit == sit->second.end()) return nullptr;
    return &kit->second;
}

void Config::fail_missing(const std::string& section, const std::string& key) const {
    throw std::runtime_error(origin_ + ": missing required key [" + section + "] " + key);
}

void Config::fail_parse(const std::string& section, const std::string& key,
                        const std::string& type) const {
    throw std::runtime_error(origin_ + ": value of [" + section + "] " + key +
                             " is not a valid " + type);
}

bool Config::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
    const std::string* v = find(section, key);
    if (!v) fail_missing(section, key);
    return *v;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    const std::string* v = find(section, key);
    return v ? *v : fallback;
}

double Config::get_real(const std::string& section, const std::string& key) const {
    const std::string* v = find(section, key);
    if (!v) fail_missing(section, key);
    bool ok = false;
    const double x = parse_real(*v, ok);
    if (!ok) fail_parse(section, key, "real");
    return x;
}

double Config::get_real(const std::string& section, const std::string& key,
                        double fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    bool ok = false;
    const double x = parse_real(*v, ok);
    if (!ok) fail_parse(section, key, "real");
    return x;
}

long Config::get_int(const std::string& section, const std::string& key) const {
    const std::string* v = find(section, key);
    if (!v) fail_missing(section, key);
    bool ok = false;
    const long x = parse_int(*v, ok);
    if (!ok) fail_parse(section, key, "integer");
    return x;
}

long Config::get_int(const std::string& section, const std::string& key, long fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    bool ok = false;
    const long x = parse_int(*v, ok);
    if (!ok) fail_parse(section, key, "integer");
    return x;
}

std::uint64_t Config::get_uint64(const std::string& section, const std::string& key,
                                 std::uint64_t fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    try {
        std::size_t pos = 0;
        const std::uint64_t x = std::stoull(*v, &pos, 0);
        if (pos != v->size()) fail_parse(section, key, "unsigned integer");
        return x;
    } catch (const std::invalid_argument&) {
        fail_parse(section, key, "unsigned integer");
    } catch (const std::out_of_range&) {
        fail_parse(section, key, "unsigned integer");
    }
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    fail_parse(section, key, "boolean");
}

std::vector<double> Config::get_real_list(const std::string& section, const std::string& key,
                                          const std::vector<double>& fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    std::vector<double> out;
    for (const std::string& part : split_commas(*v)) {
        bool ok = false;
        out.push_back(parse_real(part, ok));
        if (!ok) fail_parse(section, key, "real list");
    }
    return out;
}

std::vector<long> Config::get_int_list(const std::string& section, const std::string& key,
                                       const std::vector<long>& fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    std::vector<long> out;
    for (const std::string& part : split_commas(*v)) {
        bool ok = false;
        out.push_back(parse_int(part, ok));
        if (!ok) fail_parse(section, key, "integer list");
    }
    return out;
}

std::vector<std::string> Config::section_names() const {
    std::vector<std::string> out;
    out.reserve(data_.size());
    for (const auto& [name, _] : data_) out.push_back(name);
    return out;
}

std::vector<std::string> Config::keys(const std::string& section) const {
    std::vector<std::string> out;
    const auto sit = data_.find(section);
    if (sit == data_.end()) return out;
    out.reserve(sit->second.size());
    for (const auto& [name, _] : sit->second) out.push_back(name);
    return out;
}

} // namespace logbloch
