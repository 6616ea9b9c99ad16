#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hetcache/bitvec.hpp"

namespace hetcache {

// Incremental row-echelon basis over GF(2) with an augmented right-hand-side
// column. Supports rank tracking while rows stream in, and back-substitution
// once the coefficient columns reach full rank.
class Gf2Solver {
 public:
  explicit Gf2Solver(std::size_t columns);

  // Reduces `row` against the basis and keeps it if it adds rank.
  // Returns true iff rank increased. Rows must have exactly `columns` bits.
  bool add_row(const BitVec& row, bool rhs = false);

  std::size_t rank() const { return rank_; }
  std::size_t columns() const { return columns_; }
  bool complete() const { return rank_ == columns_; }

  // A reduced row came out 0 = 1 at some point; the system is unsatisfiable.
  bool inconsistent() const { return inconsistent_; }

  // Unique solution of the stored system; nullopt unless complete().
  std::optional<BitVec> solve() const;

 private:
  std::size_t columns_;
  std::size_t rank_ = 0;
  bool inconsistent_ = false;
  std::vector<BitVec> rows_;            // each columns_+1 bits, last bit = rhs
  std::vector<std::int32_t> pivot_row_; // column -> index into rows_, -1 if free
};

}  // namespace hetcache
