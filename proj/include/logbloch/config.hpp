#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace logbloch {

/// Sectioned key = value text config. Full-line comments start with '#' or
/// ';'. Keys before the first [section] live in the unnamed section "".
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& section, const std::string& key) const;

    /// Missing-key getters throw std::runtime_error naming section.key.
    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;

    double get_real(const std::string& section, const std::string& key) const;
    double get_real(const std::string& section, const std::string& key, double fallback) const;

    long get_int(const std::string& section, const std::string& key) const;
    long get_int(const std::string& section, const std::string& key, long fallback) const;

    std::uint64_t get_uint64(const std::string& section, const std::string& key,
                             std::uint64_t fallback) const;

    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    /// Comma-separated lists; empty value -> empty list.
    std::vector<double> get_real_list(const std::string& section, const std::string& key,
                                      const std::vector<double>& fallback) const;
    std::vector<long> get_int_list(const std::string& section, const std::string& key,
                                   const std::vector<long>& fallback) const;

    std::vector<std::string> section_names() const;
    std::vector<std::string> keys(const std::string& section) const;

private:
    // section -> key -> value; std::map keeps iteration deterministic.
    std::map<std::string, std::map<std::string, std::string>> data_;
    std::string origin_ = "<empty>";

    const std::string* find(const std::string& section, const std::string& key) const;
    [[noreturn]] void fail_missing(const std::string& section, const std::string& key) const;
    [[noreturn]] void fail_parse(const std::string& section, const std::string& key,
                                 const std::string& type) const;
};

} // namespace logbloch
