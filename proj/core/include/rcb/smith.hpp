#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rcb/integer.hpp"

namespace rcb {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Appends a row; the row length must equal cols() (or sets cols() on the first row).
  void append_row(const std::vector<BigInt>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  // Nonzero diagonal entries d_1 | d_2 | ... | d_k, all positive (1s included).
  std::vector<BigInt> invariant_factors;
  // Free rank of the cokernel Z^cols / (row lattice): cols - k.
  std::size_t cokernel_rank = 0;
};

// Rows are relations and columns generators, so the presented group is
// Z^cols modulo the integer row span.
SmithForm smith_normal_form(IntMatrix a);

// Finitely generated abelian group in invariant-factor form: torsion factors
// t_1 | t_2 | ... with every t_i >= 2, plus a free rank.
struct AbelianGroup {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  bool operator==(const AbelianGroup&) const = default;

  // "Z_2 + Z_6 + Z^2", "0" for the trivial group.
  std::string to_string() const;
};

AbelianGroup abelian_group_from_presentation(const IntMatrix& relations);

// Direct sum of cyclic groups Z_{orders[i]} (0 encodes Z) plus extra free rank,
// normalized to invariant-factor form.
AbelianGroup direct_sum_of_cyclics(const std::vector<std::int64_t>& orders, std::size_t extra_free = 0);

}  // namespace rcb
