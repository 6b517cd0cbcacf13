#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace strichartz {

/// Format a double with 17 significant digits, '.' decimal, no locale.
std::string format_double(double v);

/// Minimal CSV builder: numeric and plain-token cells only, deterministic
/// byte output (the reproducibility contract of the experiment suite).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(const std::vector<std::string>& cells);
    std::string str() const { return body_.str(); }
    void save(const std::string& path) const;

    static std::string cell(double v) { return format_double(v); }
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(int v) { return std::to_string(v); }

private:
    std::size_t columns_;
    std::ostringstream body_;
};

} // namespace strichartz
