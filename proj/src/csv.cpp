#include "strichartz/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace strichartz {

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size())
{
    add_row(header);
}

void CsvWriter::add_row(const std::vector<std::string>& cells)
{
    if (cells.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) body_ << ',';
        body_ << cells[i];
    }
    body_ << '\n';
}

void CsvWriter::save(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body_.str();
}

} // namespace strichartz
