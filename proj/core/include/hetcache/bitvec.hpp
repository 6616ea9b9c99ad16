#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace hetcache {

// Dense bit sequence over 64-bit words. Bits beyond size() are kept zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static BitVec random(std::size_t bits, std::mt19937_64& rng);

  std::size_t size() const { return bits_; }
  bool empty() const { return bits_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = 1ull << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  // Keeps the low bits on shrink; new bits are zero on growth.
  void resize(std::size_t bits);

  // XOR over the overlap; sizes may differ (use xor_padded for the padded op).
  void xor_with(const BitVec& other);

  std::size_t count() const;

  // Index of the lowest set bit, or -1 when all zero.
  std::ptrdiff_t find_first() const;

  // Parity of popcount(*this AND other), over the shorter of the two.
  bool and_parity(const BitVec& other) const;

  bool any() const { return find_first() >= 0; }

  bool operator==(const BitVec& other) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_hex() const;

  // "0110..." for small vectors; tests and dumps only.
  std::string to_bit_string() const;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;

  void mask_tail();
};

// Zero-padded XOR: the shorter operand is padded with zeros at the tail, so
// the result has the longer operand's length.
BitVec xor_padded(const BitVec& a, const BitVec& b);

// Values of `source` at `positions`, in the order given.
BitVec gather(const BitVec& source, std::span<const std::uint32_t> positions);

// Writes values[j] into target at positions[j].
void scatter(BitVec& target, std::span<const std::uint32_t> positions, const BitVec& values);

BitVec bitvec_from_string(std::string_view bits);

}  // namespace hetcache
