#include "hetcache/gf2.hpp"

#include <stdexcept>

namespace hetcache {

Gf2Solver::Gf2Solver(std::size_t columns)
    : columns_(columns), pivot_row_(columns, -1) {}

bool Gf2Solver::add_row(const BitVec& row, bool rhs) {
  if (row.size() != columns_)
    throw std::invalid_argument("Gf2Solver: row width mismatch");

  BitVec r = row;
  r.resize(columns_ + 1);
  if (rhs) r.set(columns_, true);

  std::ptrdiff_t lead = r.find_first();
  while (lead >= 0 && static_cast<std::size_t>(lead) < columns_ &&
         pivot_row_[lead] >= 0) {
    r.xor_with(rows_[pivot_row_[lead]]);
    lead = r.find_first();
  }

  if (lead < 0) return false;  // linearly dependent, consistent
  if (static_cast<std::size_t>(lead) == columns_) {
    inconsistent_ = true;  // 0 = 1
    return false;
  }

  pivot_row_[lead] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  ++rank_;
  return true;
}

std::optional<BitVec> Gf2Solver::solve() const {
  if (!complete() || inconsistent_) return std::nullopt;

  BitVec x(columns_ + 1);
  // Echelon rows: pivot columns are distinct; resolve from the highest
  // pivot down so every non-pivot term of a row is already solved.
  for (std::size_t col = columns_; col-- > 0;) {
    const BitVec& row = rows_[pivot_row_[col]];
    // row = [coeffs | rhs]; x holds solved bits (x[pivot]=0 until assigned).
    bool v = row.get(columns_) ^ row.and_parity(x);
    x.set(col, v);
  }
  x.resize(columns_);
  return x;
}

}  // namespace hetcache
