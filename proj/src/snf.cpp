#include "npc2/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace npc2 {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant: not square");
  std::size_t n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Elementary row/column operations applied to A and mirrored into U or V so
// that U*A0*V stays equal to the working matrix.
struct Worker {
  IntMatrix a, u, v;

  explicit Worker(const IntMatrix& input)
      : a(input),
        u(IntMatrix::identity(input.rows)),
        v(IntMatrix::identity(input.cols)) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows; ++k) std::swap(a.at(k, i), a.at(k, j));
    for (std::size_t k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {  // row dst += f * row src
    for (std::size_t k = 0; k < a.cols; ++k) a.at(dst, k) += f * a.at(src, k);
    for (std::size_t k = 0; k < u.cols; ++k) u.at(dst, k) += f * u.at(src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t k = 0; k < a.rows; ++k) a.at(k, dst) += f * a.at(k, src);
    for (std::size_t k = 0; k < v.rows; ++k) v.at(k, dst) += f * v.at(k, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols; ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
  }
};

// Division with the remainder balanced into [-|b|/2, |b|/2]; keeps entry
// growth under control during the reduction.
Integer divide_rounded(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  Worker w(input);
  IntMatrix& a = w.a;
  const std::size_t n = std::min(a.rows, a.cols);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Pivot: smallest nonzero |entry| in the remaining block. Re-selected
      // after every pass so remainders keep shrinking the pivot.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < a.rows; ++i)
        for (std::size_t j = t; j < a.cols; ++j) {
          if (a.at(i, j) == 0) continue;
          if (!found || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = n;  // block is zero: done
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool remainder = false;
      for (std::size_t i = t + 1; i < a.rows; ++i) {
        if (a.at(i, t) == 0) continue;
        w.add_row(i, t, -divide_rounded(a.at(i, t), a.at(t, t)));
        if (a.at(i, t) != 0) remainder = true;
      }
      if (remainder) continue;  // a strictly smaller entry exists: re-pivot
      for (std::size_t j = t + 1; j < a.cols; ++j) {
        if (a.at(t, j) == 0) continue;
        w.add_col(j, t, -divide_rounded(a.at(t, j), a.at(t, t)));
        if (a.at(t, j) != 0) remainder = true;
      }
      if (remainder) continue;
      if (a.at(t, t) < 0) w.negate_row(t);
      break;
    }
    if (t == n) break;
  }

  // Enforce the divisibility chain d1 | d2 | ... by folding offenders back in.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < n; ++t) {
      const Integer& d1 = a.at(t, t);
      const Integer& d2 = a.at(t + 1, t + 1);
      if (d1 == 0 && d2 != 0) {  // push zeros to the end
        w.swap_rows(t, t + 1);
        w.swap_cols(t, t + 1);
        changed = true;
        continue;
      }
      if (d1 == 0 || d2 == 0 || d2 % d1 == 0) continue;
      // Standard trick: add column t+1 to column t, then re-reduce the 2x2
      // block to gcd/lcm via row and column operations.
      w.add_col(t, t + 1, 1);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        if (a.at(t + 1, t) != 0) {
          w.add_row(t + 1, t, -divide_rounded(a.at(t + 1, t), a.at(t, t)));
          if (a.at(t + 1, t) != 0) {
            w.swap_rows(t, t + 1);
            dirty = true;
          }
        }
        if (a.at(t, t + 1) != 0) {
          w.add_col(t + 1, t, -divide_rounded(a.at(t, t + 1), a.at(t, t)));
          if (a.at(t, t + 1) != 0) {
            w.swap_cols(t, t + 1);
            dirty = true;
          }
        }
      }
      if (a.at(t, t) < 0) w.negate_row(t);
      if (a.at(t + 1, t + 1) < 0) w.negate_row(t + 1);
      changed = true;
    }
  }

  SmithResult result;
  result.d = a;
  result.u = std::move(w.u);
  result.v = std::move(w.v);
  for (std::size_t t = 0; t < n; ++t)
    if (a.at(t, t) != 0) {
      result.invariant_factors.push_back(a.at(t, t));
      ++result.rank;
    }
  return result;
}

}  // namespace npc2
