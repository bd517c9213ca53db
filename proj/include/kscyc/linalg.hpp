#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kscyc/rational.hpp"

namespace kscyc {

using SparseRow = std::map<int, Rational>;
using Matrix = std::vector<std::vector<Rational>>;

// Incremental sparse Gaussian elimination over Q.
class Eliminator {
 public:
  explicit Eliminator(int ncols) : ncols_(ncols) {}

  // Reduces the row against the current pivots and keeps it if nonzero.
  // Returns true if the rank grew.
  bool add_row(SparseRow row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }

  // Basis of {x : A x = 0}; vectors indexed by column.
  std::vector<SparseRow> nullspace() const;

 private:
  void reduce(SparseRow& row) const;

  int ncols_;
  std::map<int, SparseRow> pivots_;  // pivot column -> row, pivot entry 1
};

int rank(const Matrix& a);

// Solves A x = b; nullopt if inconsistent.  Free variables are set to 0.
std::optional<std::vector<Rational>> solve(const Matrix& a,
                                           const std::vector<Rational>& b);

Matrix transpose(const Matrix& a);

}  // namespace kscyc
