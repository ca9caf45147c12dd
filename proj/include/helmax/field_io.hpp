// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors
//
// LAPF field snapshot format (little-endian):
//   magic "LAPF" (4 bytes), u32 version = 1, u32 n, u32 m, u32 N, f64 L,
//   then m * N^n complex samples as interleaved f64 (re, im),
//   C-order, component-major.

#ifndef HELMAX_FIELD_IO_HPP
#define HELMAX_FIELD_IO_HPP

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "helmax/field.hpp"

namespace helmax {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void save_lapf(const Field& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("save_lapf: cannot open '" + path + "'");
  const char magic[4] = {'L', 'A', 'P', 'F'};
  os.write(magic, 4);
  auto put_u32 = [&](std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); };
  put_u32(1);
  put_u32(static_cast<std::uint32_t>(f.grid().dim()));
  put_u32(static_cast<std::uint32_t>(f.components()));
  put_u32(static_cast<std::uint32_t>(f.grid().extent()));
  const double L = f.grid().length();
  os.write(reinterpret_cast<const char*>(&L), 8);
  os.write(reinterpret_cast<const char*>(f.data().data()),
           static_cast<std::streamsize>(f.data().size() * sizeof(Complex)));
  if (!os) throw IoError("save_lapf: write failed for '" + path + "'");
}

inline Field load_lapf(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("load_lapf: cannot open '" + path + "'");
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "LAPF", 4) != 0)
    throw IoError("load_lapf: bad magic in '" + path + "'");
  auto get_u32 = [&]() {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
  };
  const std::uint32_t version = get_u32();
  if (version != 1) throw IoError("load_lapf: unsupported version");
  const std::uint32_t n = get_u32();
  const std::uint32_t m = get_u32();
  const std::uint32_t N = get_u32();
  double L = 0.0;
  is.read(reinterpret_cast<char*>(&L), 8);
  if (!is) throw IoError("load_lapf: truncated header in '" + path + "'");
  Field f(Grid(static_cast<int>(n), static_cast<int>(N), L), static_cast<int>(m));
  is.read(reinterpret_cast<char*>(f.data().data()),
          static_cast<std::streamsize>(f.data().size() * sizeof(Complex)));
  if (!is) throw IoError("load_lapf: truncated payload in '" + path + "'");
  return f;
}

}  // namespace helmax

#endif
