// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace eegdec::binio {

// All on-disk numeric payloads are little-endian regardless of host order.

inline void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

inline std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4)) {
    throw std::runtime_error("unexpected end of file while reading u32");
  }
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

template <typename T>
void put_scalar_le(std::ostream& os, T v) {
  static_assert(sizeof(T) == 4 || sizeof(T) == 8);
  if constexpr (sizeof(T) == 4) {
    put_u32(os, std::bit_cast<std::uint32_t>(v));
  } else {
    const auto u = std::bit_cast<std::uint64_t>(v);
    put_u32(os, static_cast<std::uint32_t>(u));
    put_u32(os, static_cast<std::uint32_t>(u >> 32));
  }
}

inline void put_f32_span(std::ostream& os, std::span<const float> xs) {
  std::vector<unsigned char> buf(xs.size() * 4);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto u = std::bit_cast<std::uint32_t>(xs[i]);
    buf[4 * i + 0] = static_cast<unsigned char>(u);
    buf[4 * i + 1] = static_cast<unsigned char>(u >> 8);
    buf[4 * i + 2] = static_cast<unsigned char>(u >> 16);
    buf[4 * i + 3] = static_cast<unsigned char>(u >> 24);
  }
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

/// Reads exactly xs.size() floats; returns the number of bytes actually read
/// so callers can report truncation precisely.
inline std::size_t get_f32_span(std::istream& is, std::span<float> xs) {
  std::vector<unsigned char> buf(xs.size() * 4);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  const std::size_t got = static_cast<std::size_t>(is.gcount());
  for (std::size_t i = 0; i + 3 < got; i += 4) {
    const std::uint32_t u = static_cast<std::uint32_t>(buf[i]) |
                            (static_cast<std::uint32_t>(buf[i + 1]) << 8) |
                            (static_cast<std::uint32_t>(buf[i + 2]) << 16) |
                            (static_cast<std::uint32_t>(buf[i + 3]) << 24);
    xs[i / 4] = std::bit_cast<float>(u);
  }
  return got;
}

inline void put_f64_span(std::ostream& os, std::span<const double> xs) {
  std::vector<unsigned char> buf(xs.size() * 8);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto u = std::bit_cast<std::uint64_t>(xs[i]);
    for (int k = 0; k < 8; ++k) buf[8 * i + k] = static_cast<unsigned char>(u >> (8 * k));
  }
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

inline std::size_t get_f64_span(std::istream& is, std::span<double> xs) {
  std::vector<unsigned char> buf(xs.size() * 8);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  const std::size_t got = static_cast<std::size_t>(is.gcount());
  for (std::size_t i = 0; i + 7 < got; i += 8) {
    std::uint64_t u = 0;
    for (int k = 0; k < 8; ++k) u |= static_cast<std::uint64_t>(buf[i + k]) << (8 * k);
    xs[i / 8] = std::bit_cast<double>(u);
  }
  return got;
}

}  // namespace eegdec::binio
