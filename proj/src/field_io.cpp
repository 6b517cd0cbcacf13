#include "strichartz/field_io.hpp"

#include "strichartz/csv.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "field binary layout assumes a little-endian host");

namespace strichartz {

namespace {

constexpr char kMagic[4] = {'S', 'T', 'Z', 'F'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& out, T v)
{
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::ifstream& in)
{
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!in) throw std::runtime_error("field binary: truncated file");
    return v;
}

} // namespace

void write_field_csv(const SpaceTimeField& field, const std::string& path)
{
    CsvWriter csv({"t", "r", "re_u", "im_u"});
    for (std::size_t i = 0; i < field.grid.t_nodes.size(); ++i)
        for (std::size_t j = 0; j < field.grid.r_nodes.size(); ++j) {
            const Complex& v = field.at(i, j);
            csv.add_row({CsvWriter::cell(field.grid.t_nodes[i]),
                         CsvWriter::cell(field.grid.r_nodes[j]), CsvWriter::cell(v.real()),
                         CsvWriter::cell(v.imag())});
        }
    csv.save(path);
}

void write_field_binary(const SpaceTimeField& field, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(kMagic, 4);
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(field.grid.n));
    put<std::int32_t>(out, field.harmonic_index ? *field.harmonic_index : -1);
    put<std::uint64_t>(out, field.grid.t_nodes.size());
    put<std::uint64_t>(out, field.grid.r_nodes.size());
    for (double t : field.grid.t_nodes) put(out, t);
    for (double r : field.grid.r_nodes) put(out, r);
    for (const Complex& v : field.values) {
        put(out, v.real());
        put(out, v.imag());
    }
}

SpaceTimeField read_field_binary(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("field binary: bad magic");
    if (get<std::uint32_t>(in) != kVersion) throw std::runtime_error("field binary: bad version");

    SpaceTimeField field;
    field.grid.n = static_cast<int>(get<std::uint32_t>(in));
    std::int32_t k = get<std::int32_t>(in);
    if (k >= 0) field.harmonic_index = k;
    const std::uint64_t nt = get<std::uint64_t>(in);
    const std::uint64_t nr = get<std::uint64_t>(in);
    field.grid.t_nodes.resize(nt);
    field.grid.r_nodes.resize(nr);
    for (auto& t : field.grid.t_nodes) t = get<double>(in);
    for (auto& r : field.grid.r_nodes) r = get<double>(in);
    field.values.resize(nt * nr);
    for (auto& v : field.values) {
        double re = get<double>(in);
        double im = get<double>(in);
        v = Complex(re, im);
    }
    return field;
}

} // namespace strichartz
