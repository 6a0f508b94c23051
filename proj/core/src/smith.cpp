#include "rcb/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace rcb {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (long v : r) row.emplace_back(v);
    append_row(row);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(const std::vector<BigInt>& row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw ValidationError("IntMatrix::append_row: row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void sub_row(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
}

void sub_col(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
}

// Moves the entry of least nonzero magnitude in the trailing block to (t, t).
bool bring_min_to_pivot(IntMatrix& a, std::size_t t) {
  std::size_t br = 0, bc = 0;
  bool found = false;
  BigInt best;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      BigInt m = abs(a(r, c));
      if (!found || m < best) {
        best = m;
        br = r;
        bc = c;
        found = true;
      }
    }
  if (!found) return false;
  swap_rows(a, t, br);
  swap_cols(a, t, bc);
  return true;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    if (!bring_min_to_pivot(a, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        sub_row(a, r, t, q);
        if (a(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        sub_col(a, c, t, q);
        if (a(t, c) != 0) dirty = true;
      }
      if (dirty) {
        bring_min_to_pivot(a, t);
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool fixed = false;
      for (std::size_t r = t + 1; r < a.rows() && !fixed; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t()) == 0) {
            for (std::size_t k = 0; k < a.cols(); ++k) a(t, k) += a(r, k);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (a(t, t) < 0) a(t, t) = -a(t, t);
  }
  SmithForm out;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a(i, i));
  out.cokernel_rank = a.cols() - t;
  return out;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : torsion) {
    if (!first) os << " + ";
    os << "Z_" << f.get_str();
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

AbelianGroup abelian_group_from_presentation(const IntMatrix& relations) {
  AbelianGroup g;
  if (relations.rows() == 0) {
    g.free_rank = relations.cols();
    return g;
  }
  const SmithForm snf = smith_normal_form(relations);
  for (const auto& f : snf.invariant_factors)
    if (f != 1) g.torsion.push_back(f);
  g.free_rank = snf.cokernel_rank;
  return g;
}

AbelianGroup direct_sum_of_cyclics(const std::vector<std::int64_t>& orders, std::size_t extra_free) {
  const std::size_t n = orders.size() + extra_free;
  IntMatrix rel(n, n);
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i] < 0 ? -orders[i] : orders[i];
  if (n == 0) return {};
  return abelian_group_from_presentation(rel);
}

}  // namespace rcb
