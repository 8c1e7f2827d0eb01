// Exact integer matrices and Smith normal form over arbitrary-precision
// integers; the engine behind homology ranks, torsion and abelianization.
#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace npc2 {

using Integer = boost::multiprecision::cpp_int;

/// Row-major dense integer matrix; rows * cols may be zero.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Integer& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  static IntMatrix identity(std::size_t n);
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination; square input only.
Integer determinant(const IntMatrix& a);

/// D = U * A * V with U, V unimodular, D diagonal with d1 | d2 | ...,
/// diagonal entries nonnegative.
struct SmithResult {
  IntMatrix u, d, v;
  std::size_t rank = 0;                   // number of nonzero diagonal entries
  std::vector<Integer> invariant_factors; // the nonzero diagonal, in order
};

SmithResult smith_normal_form(const IntMatrix& a);

}  // namespace npc2
