#pragma once

// Sieve cache file:
//   "PNTSIEVE1"                    9-byte magic
//   n_max                          u64, little-endian
//   Lambda(1) .. Lambda(n_max)     IEEE-754 binary64, little-endian
//   checksum                       u64 FNV-1a over every preceding byte

#include <array>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "pnt/error.hpp"
#include "pnt/sieve.hpp"

namespace pnt {

inline constexpr std::string_view kCacheMagic = "PNTSIEVE1";

namespace detail {

class Fnv1a {
 public:
  void update(const unsigned char* data, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) {
      hash_ ^= data[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

inline std::array<unsigned char, 8> to_le(std::uint64_t v) {
  std::array<unsigned char, 8> out{};
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
  return out;
}

inline std::uint64_t from_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace detail

inline std::vector<unsigned char> encode_cache(const LambdaTable& table) {
  const auto n_max = static_cast<std::uint64_t>(table.n_max());
  std::vector<unsigned char> bytes(kCacheMagic.begin(), kCacheMagic.end());
  bytes.reserve(kCacheMagic.size() + 16 + 8 * n_max);
  const auto push = [&bytes](std::uint64_t v) {
    const auto le = detail::to_le(v);
    bytes.insert(bytes.end(), le.begin(), le.end());
  };
  push(n_max);
  const auto lambda = table.lambda_values();
  for (std::uint64_t n = 1; n <= n_max; ++n) push(std::bit_cast<std::uint64_t>(lambda[n]));
  detail::Fnv1a fnv;
  fnv.update(bytes.data(), bytes.size());
  push(fnv.value());
  return bytes;
}

inline LambdaTable decode_cache(const std::vector<unsigned char>& bytes) {
  const std::size_t header = kCacheMagic.size() + 8;
  if (bytes.size() < header + 8 ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()), kCacheMagic.size()) != kCacheMagic) {
    throw cache_error("sieve cache: bad magic");
  }
  const std::uint64_t n_max = detail::from_le(bytes.data() + kCacheMagic.size());
  if (n_max == 0 || n_max > (bytes.size() - header - 8) / 8 ||
      bytes.size() != header + 8 * n_max + 8) {
    throw cache_error("sieve cache: truncated or oversized payload for n_max " + std::to_string(n_max));
  }
  detail::Fnv1a fnv;
  fnv.update(bytes.data(), bytes.size() - 8);
  if (fnv.value() != detail::from_le(bytes.data() + bytes.size() - 8)) {
    throw cache_error("sieve cache: checksum mismatch");
  }
  std::vector<double> lambda(n_max + 1, 0.0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    lambda[n] = std::bit_cast<double>(detail::from_le(bytes.data() + header + 8 * (n - 1)));
  }
  return LambdaTable::from_lambda(std::move(lambda));
}

inline void write_cache(const LambdaTable& table, const std::filesystem::path& path) {
  const auto bytes = encode_cache(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw cache_error("sieve cache: cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw cache_error("sieve cache: write failed for " + path.string());
}

inline LambdaTable read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cache_error("sieve cache: cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_cache(bytes);
}

}  // namespace pnt
