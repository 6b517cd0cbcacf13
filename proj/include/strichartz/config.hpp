#pragma once

#include <map>
#include <string>
#include <vector>

namespace strichartz {

/// Flat key-value config with [section] headers, '#' comments and
/// "key = value" lines. Values keep their exact text, so a parse /
/// serialize round trip is lossless.
class Config {
public:
    Config() = default;

    static Config parse(const std::string& text);
    static Config load(const std::string& path);
    std::string serialize() const;

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    void set(const std::string& section, const std::string& key, const std::string& value);

    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    std::vector<double> get_list(const std::string& section, const std::string& key,
                                 const std::vector<double>& fallback) const;

    friend bool operator==(const Config& a, const Config& b) { return a.data_ == b.data_; }

private:
    // section -> ordered key/value pairs
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> data_;
};

} // namespace strichartz
