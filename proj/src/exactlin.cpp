#include "latticecm/exactlin.hpp"

#include "latticecm/errors.hpp"

namespace latticecm {

namespace {

void check_nonempty(const IntMatrix& a) {
  if (a.rows() < 1 || a.cols() < 1)
    throw Error(ErrorCode::InvalidArgument, "matrix must be nonempty");
}

// Index of the row r in [from, rows) minimizing |a(r, col)| over nonzero
// entries, or -1 if the column is zero below `from`.
Index smallest_pivot_row(const IntMatrix& a, Index from, Index col) {
  Index best = -1;
  for (Index r = from; r < a.rows(); ++r) {
    if (a(r, col) == 0) continue;
    if (best == -1 || abs(a(r, col)) < abs(a(best, col))) best = r;
  }
  return best;
}

// Bareiss steps divide exactly by the previous pivot; a failed division
// would corrupt the result silently, so it is checked.
Int exact_div(const Int& num, const Int& den) {
  if (den != 1 && num % den != 0)
    throw Error(ErrorCode::Internal, "fraction-free elimination: inexact division");
  return num / den;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& a) {
  check_nonempty(a);
  IntMatrix h = a;
  IntMatrix u = IntMatrix::Identity(a.rows(), a.rows());
  Index row = 0;
  for (Index col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclid on the column: keep the smallest nonzero entry as pivot and
    // reduce the others until only the pivot survives.
    while (true) {
      Index p = smallest_pivot_row(h, row, col);
      if (p == -1) break;
      if (p != row) {
        h.row(p).swap(h.row(row));
        u.row(p).swap(u.row(row));
      }
      bool cleared = true;
      for (Index r = row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Int q = floor_div(h(r, col), h(row, col));
        h.row(r) -= q * h.row(row);
        u.row(r) -= q * u.row(row);
        if (h(r, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    for (Index r = 0; r < row; ++r) {
      Int q = floor_div(h(r, col), h(row, col));
      if (q != 0) {
        h.row(r) -= q * h.row(row);
        u.row(r) -= q * u.row(row);
      }
    }
    ++row;
  }
  return {h, u};
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> f;
  Index k = std::min(d.rows(), d.cols());
  for (Index i = 0; i < k; ++i)
    if (d(i, i) != 0) f.push_back(d(i, i));
  return f;
}

SmithResult smith_normal_form(const IntMatrix& a) {
  check_nonempty(a);
  IntMatrix d = a;
  IntMatrix u = IntMatrix::Identity(a.rows(), a.rows());
  IntMatrix v = IntMatrix::Identity(a.cols(), a.cols());
  Index k = std::min(d.rows(), d.cols());

  for (Index t = 0; t < k; ++t) {
    // Locate the smallest nonzero entry of the trailing submatrix.
    Index pr = -1, pc = -1;
    for (Index i = t; i < d.rows(); ++i)
      for (Index j = t; j < d.cols(); ++j) {
        if (d(i, j) == 0) continue;
        if (pr == -1 || abs(d(i, j)) < abs(d(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr == -1) break;
    if (pr != t) {
      d.row(pr).swap(d.row(t));
      u.row(pr).swap(u.row(t));
    }
    if (pc != t) {
      d.col(pc).swap(d.col(t));
      v.col(pc).swap(v.col(t));
    }

    while (true) {
      bool clean = true;
      for (Index i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        d.row(i) -= q * d.row(t);
        u.row(i) -= q * u.row(t);
        if (d(i, t) != 0) {
          // Remainder is smaller than the pivot; promote it.
          d.row(i).swap(d.row(t));
          u.row(i).swap(u.row(t));
          clean = false;
        }
      }
      for (Index j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        d.col(j) -= q * d.col(t);
        v.col(j) -= q * v.col(t);
        if (d(t, j) != 0) {
          d.col(j).swap(d.col(t));
          v.col(j).swap(v.col(t));
          clean = false;
        }
      }
      if (!clean) continue;
      // Row and column are clean; enforce divisibility of the rest.
      bool divisible = true;
      for (Index i = t + 1; i < d.rows() && divisible; ++i)
        for (Index j = t + 1; j < d.cols() && divisible; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            u.row(t) += u.row(i);
            divisible = false;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return {d, u, v};
}

Int determinant(const IntMatrix& a) {
  check_nonempty(a);
  if (a.rows() != a.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  IntMatrix m = a;
  const Index n = m.rows();
  Int prev = 1;
  int sign = 1;
  for (Index c = 0; c < n - 1; ++c) {
    if (m(c, c) == 0) {
      Index p = -1;
      for (Index r = c + 1; r < n; ++r)
        if (m(r, c) != 0) {
          p = r;
          break;
        }
      if (p == -1) return 0;
      m.row(p).swap(m.row(c));
      sign = -sign;
    }
    for (Index i = c + 1; i < n; ++i) {
      for (Index j = c + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(c, c) - m(i, c) * m(c, j), prev);
      m(i, c) = 0;
    }
    prev = m(c, c);
  }
  return sign * m(n - 1, n - 1);
}

Index integer_rank(const IntMatrix& a) {
  check_nonempty(a);
  IntMatrix m = a;
  const Index rows = m.rows(), cols = m.cols();
  Int prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j)
        m(i, j) = exact_div(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::vector<RationalVector> rational_kernel_basis(const IntMatrix& a) {
  check_nonempty(a);
  RationalMatrix m = to_rational(a);
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    if (p != r) m.row(p).swap(m.row(r));
    m.row(r) /= m(r, c);
    for (Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<RationalVector> basis;
  Index next_pivot = 0;
  for (Index c = 0; c < cols; ++c) {
    if (next_pivot < static_cast<Index>(pivot_col.size()) &&
        pivot_col[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    RationalVector k = RationalVector::Zero(cols);
    k(c) = 1;
    for (Index i = 0; i < static_cast<Index>(pivot_col.size()); ++i)
      k(pivot_col[i]) = -m(i, c);
    basis.push_back(k);
  }
  return basis;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& w) {
  if (w.size() != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve_integer: size mismatch");
  SmithResult s = smith_normal_form(a);
  IntVector y = s.u * w;
  const Index m = a.cols();
  IntVector x = IntVector::Zero(m);
  Index k = std::min(a.rows(), m);
  for (Index i = 0; i < y.size(); ++i) {
    if (i < k && s.d(i, i) != 0) {
      if (y(i) % s.d(i, i) != 0) return std::nullopt;
      x(i) = y(i) / s.d(i, i);
    } else if (y(i) != 0) {
      return std::nullopt;
    }
  }
  IntVector z = s.v * x;
  return z;
}

}  // namespace latticecm
