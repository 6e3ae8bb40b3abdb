#pragma once

#include <string>

#include "logsp/grid.hpp"

namespace logsp {

// "LSPF1" field dump. 24-byte header: magic "LSPF1\0", u32-LE N, f64-LE L,
// 6 zero pad bytes; then N^2 f64-LE values, row-major.
void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);

// 64-bit FNV-1a over a file's bytes; used by run manifests.
std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace logsp
