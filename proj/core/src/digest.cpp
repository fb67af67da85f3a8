#include "remop/digest.hpp"

#include <cstring>

namespace remop {

namespace {
constexpr uint64_t kOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kPrime = 0x100000001b3ULL;

uint64_t mix(uint64_t state, std::span<const unsigned char> bytes) {
  for (unsigned char b : bytes) {
    state ^= b;
    state *= kPrime;
  }
  return state;
}
}  // namespace

uint64_t fnv1a64(std::span<const unsigned char> bytes) { return mix(kOffset, bytes); }

uint64_t fnv1a64(std::string_view text) {
  return fnv1a64(std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(text.data()), text.size()));
}

void Fnv1a64::update(std::span<const unsigned char> bytes) { state_ = mix(state_, bytes); }

void Fnv1a64::update(const std::vector<double>& values) {
  update(std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(values.data()), values.size() * sizeof(double)));
}

std::string Fnv1a64::hex() const { return to_hex(state_); }

std::string to_hex(uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace remop
