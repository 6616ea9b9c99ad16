#include "hetcache/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace hetcache {

void BitVec::mask_tail() {
  if (bits_ & 63) words_.back() &= (1ull << (bits_ & 63)) - 1;
}

BitVec BitVec::random(std::size_t bits, std::mt19937_64& rng) {
  BitVec v(bits);
  for (auto& w : v.words_) w = rng();
  v.mask_tail();
  return v;
}

void BitVec::resize(std::size_t bits) {
  bits_ = bits;
  words_.resize((bits + 63) / 64, 0);
  if (!words_.empty()) mask_tail();
}

void BitVec::xor_with(const BitVec& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] ^= other.words_[i];
  if (!words_.empty()) mask_tail();
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::ptrdiff_t BitVec::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<std::ptrdiff_t>(i * 64 + std::countr_zero(words_[i]));
  return -1;
}

bool BitVec::and_parity(const BitVec& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1u;
}

std::string BitVec::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve((bits_ + 3) / 4);
  for (std::size_t nibble = 0; nibble * 4 < bits_; ++nibble) {
    const std::uint64_t w = words_[nibble / 16];
    out.push_back(digits[(w >> ((nibble % 16) * 4)) & 0xf]);
  }
  return out;
}

std::string BitVec::to_bit_string() const {
  std::string out;
  out.reserve(bits_);
  for (std::size_t i = 0; i < bits_; ++i) out.push_back(get(i) ? '1' : '0');
  return out;
}

BitVec xor_padded(const BitVec& a, const BitVec& b) {
  const BitVec& longer = a.size() >= b.size() ? a : b;
  const BitVec& shorter = a.size() >= b.size() ? b : a;
  BitVec out = longer;
  out.xor_with(shorter);
  return out;
}

BitVec gather(const BitVec& source, std::span<const std::uint32_t> positions) {
  BitVec out(positions.size());
  for (std::size_t j = 0; j < positions.size(); ++j)
    if (source.get(positions[j])) out.set(j, true);
  return out;
}

void scatter(BitVec& target, std::span<const std::uint32_t> positions, const BitVec& values) {
  if (values.size() < positions.size())
    throw std::invalid_argument("scatter: fewer values than positions");
  for (std::size_t j = 0; j < positions.size(); ++j) target.set(positions[j], values.get(j));
}

BitVec bitvec_from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may contain only 0 and 1");
  }
  return v;
}

}  // namespace hetcache
