#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace remop {

// FNV-1a 64-bit over raw bytes. Used for bit-level digests of frozen
// weights and for token hashing.
uint64_t fnv1a64(std::span<const unsigned char> bytes);
uint64_t fnv1a64(std::string_view text);

// Incremental variant for digesting several buffers in a fixed order.
class Fnv1a64 {
 public:
  void update(std::span<const unsigned char> bytes);
  void update(const std::vector<double>& values);
  uint64_t value() const { return state_; }
  std::string hex() const;

 private:
  uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::string to_hex(uint64_t value);

}  // namespace remop
