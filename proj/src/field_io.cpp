#include "logsp/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "LSPF1 I/O assumes a little-endian host");

namespace logsp {

namespace {
constexpr char kMagic[6] = {'L', 'S', 'P', 'F', '1', '\0'};
constexpr std::size_t kHeaderBytes = 24;
}  // namespace

void write_field(const std::string& path, const Field& f) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  char header[kHeaderBytes] = {};
  std::memcpy(header, kMagic, 6);
  const std::uint32_t n = static_cast<std::uint32_t>(f.grid.points_per_side);
  std::memcpy(header + 6, &n, 4);
  std::memcpy(header + 10, &f.grid.half_width, 8);
  os.write(header, kHeaderBytes);
  os.write(reinterpret_cast<const char*>(f.v.data()),
           static_cast<std::streamsize>(f.v.size() * sizeof(double)));
  if (!os) throw std::runtime_error("write_field: short write to " + path);
}

Field read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);
  char header[kHeaderBytes] = {};
  is.read(header, kHeaderBytes);
  if (is.gcount() != static_cast<std::streamsize>(kHeaderBytes) ||
      std::memcmp(header, kMagic, 6) != 0) {
    throw std::runtime_error("read_field: bad LSPF1 header in " + path);
  }
  std::uint32_t n = 0;
  double L = 0.0;
  std::memcpy(&n, header + 6, 4);
  std::memcpy(&L, header + 10, 8);
  for (int k = 18; k < 24; ++k) {
    if (header[k] != 0) throw std::runtime_error("read_field: bad header padding in " + path);
  }
  GridSpec g(L, static_cast<int>(n));
  Field f(g);
  is.read(reinterpret_cast<char*>(f.v.data()),
          static_cast<std::streamsize>(f.v.size() * sizeof(double)));
  if (is.gcount() != static_cast<std::streamsize>(f.v.size() * sizeof(double))) {
    throw std::runtime_error("read_field: truncated payload in " + path);
  }
  require_finite(f, "read_field");
  return f;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("fnv1a64_file: cannot open " + path);
  std::uint64_t h = 14695981039346656037ull;
  char buf[65536];
  while (is) {
    is.read(buf, sizeof(buf));
    const std::streamsize got = is.gcount();
    for (std::streamsize k = 0; k < got; ++k) {
      h ^= static_cast<unsigned char>(buf[k]);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace logsp
