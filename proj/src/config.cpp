#include "strichartz/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace strichartz {

namespace {

std::string trim(const std::string& s)
{
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::parse(const std::string& text)
{
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            cfg.data_[section];  // keep empty sections through round trips
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        cfg.set(section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

Config Config::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string Config::serialize() const
{
    std::ostringstream out;
    for (const auto& [section, pairs] : data_) {
        if (!section.empty()) out << '[' << section << "]\n";
        for (const auto& [k, v] : pairs) out << k << " = " << v << '\n';
    }
    return out.str();
}

bool Config::has(const std::string& section, const std::string& key) const
{
    auto it = data_.find(section);
    if (it == data_.end()) return false;
    for (const auto& [k, v] : it->second)
        if (k == key) return true;
    return false;
}

std::string Config::get(const std::string& section, const std::string& key) const
{
    auto it = data_.find(section);
    if (it != data_.end())
        for (const auto& [k, v] : it->second)
            if (k == key) return v;
    throw std::invalid_argument("config: missing [" + section + "] " + key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const
{
    return has(section, key) ? get(section, key) : fallback;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value)
{
    auto& pairs = data_[section];
    for (auto& [k, v] : pairs)
        if (k == key) {
            v = value;
            return;
        }
    pairs.emplace_back(key, value);
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const
{
    if (!has(section, key)) return fallback;
    try {
        return std::stod(get(section, key));
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for [" + section + "] " + key);
    }
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const
{
    if (!has(section, key)) return fallback;
    try {
        return std::stoi(get(section, key));
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for [" + section + "] " + key);
    }
}

std::vector<double> Config::get_list(const std::string& section, const std::string& key,
                                     const std::vector<double>& fallback) const
{
    if (!has(section, key)) return fallback;
    std::vector<double> out;
    std::istringstream in(get(section, key));
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad list entry for [" + section + "] " + key);
        }
    }
    return out;
}

} // namespace strichartz
