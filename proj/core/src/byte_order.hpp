#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>

namespace nrgen::detail {

inline void put_u64_le(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> buf{};
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  os.write(buf.data(), buf.size());
}

inline void put_u32_le(std::ostream& os, std::uint32_t v) {
  std::array<char, 4> buf{};
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  os.write(buf.data(), buf.size());
}

inline void put_f64_le(std::ostream& os, double v) {
  put_u64_le(os, std::bit_cast<std::uint64_t>(v));
}

// Return false on short read.
inline bool get_u64_le(std::istream& is, std::uint64_t& out) {
  std::array<unsigned char, 8> buf{};
  if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size())) return false;
  out = 0;
  for (int i = 0; i < 8; ++i) out |= std::uint64_t{buf[i]} << (8 * i);
  return true;
}

inline bool get_u32_le(std::istream& is, std::uint32_t& out) {
  std::array<unsigned char, 4> buf{};
  if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size())) return false;
  out = 0;
  for (int i = 0; i < 4; ++i) out |= std::uint32_t{buf[i]} << (8 * i);
  return true;
}

inline bool get_f64_le(std::istream& is, double& out) {
  std::uint64_t bits = 0;
  if (!get_u64_le(is, bits)) return false;
  out = std::bit_cast<double>(bits);
  return true;
}

}  // namespace nrgen::detail
