#ifndef LATTICECM_TESTS_HELPERS_HPP
#define LATTICECM_TESTS_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "latticecm/exactlin.hpp"
#include "latticecm/lattice.hpp"
#include "latticecm/numeric.hpp"

namespace latticecm::testing {

inline IntMatrix make_matrix(Index rows, Index cols,
                             std::initializer_list<long> entries) {
  IntMatrix a(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = Int(*it++);
  return a;
}

inline IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v(entries.size());
  auto it = entries.begin();
  for (Index i = 0; i < v.size(); ++i) v(i) = Int(*it++);
  return v;
}

inline IntMatrix random_matrix(std::mt19937& rng, Index rows, Index cols,
                               long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = Int(dist(rng));
  return a;
}

// Random basis matrix acceptable to Lattice::from_basis.
inline IntMatrix random_basis(std::mt19937& rng, Index rows, Index cols,
                              long lo, long hi) {
  while (true) {
    IntMatrix a = random_matrix(rng, rows, cols, lo, hi);
    bool zero_row = false;
    for (Index i = 0; i < rows; ++i)
      if (a.row(i).isZero(0)) zero_row = true;
    if (zero_row) continue;
    if (integer_rank(a) != cols) continue;
    return a;
  }
}

// Random positive-lattice basis (rejection sampling).
inline IntMatrix random_positive_basis(std::mt19937& rng, Index rows,
                                       Index cols, long lo, long hi) {
  while (true) {
    IntMatrix a = random_basis(rng, rows, cols, lo, hi);
    if (matrix_positivity(a).positive) return a;
  }
}

// gcd of all k x k minors of A (brute force; test oracle).
inline Int minors_gcd(const IntMatrix& a, Index k) {
  Int g = 0;
  // Enumerate combinations with simple odometer loops.
  std::vector<Index> rsel(k), csel(k);
  for (Index i = 0; i < k; ++i) rsel[i] = i;
  while (true) {
    for (Index i = 0; i < k; ++i) csel[i] = i;
    while (true) {
      IntMatrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) sub(i, j) = a(rsel[i], csel[j]);
      g = gcd(g, determinant(sub));
      Index i = k;
      bool advanced = false;
      while (i-- > 0) {
        if (csel[i] != a.cols() - k + i) {
          ++csel[i];
          for (Index j = i + 1; j < k; ++j) csel[j] = csel[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    Index i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (rsel[i] != a.rows() - k + i) {
        ++rsel[i];
        for (Index j = i + 1; j < k; ++j) rsel[j] = rsel[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return g;
}

inline bool lex_less_vec(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c < 0;
  }
  return false;
}

// Independent box-bounded brute force for the nonnegative members of the
// fiber of c.  Every member u satisfies d.u = d.c for the grading d, so
// u_i <= (d.c)/d_i; inverting an invertible row subset of B and interval
// arithmetic bound each coordinate of z, and the whole integer box is
// scanned.  Shares no code with the Fourier-Motzkin enumeration.
inline std::vector<IntVector> members_box_brute(const Lattice& l,
                                                const IntVector& c) {
  if (!l.positivity().grading)
    throw std::runtime_error("box oracle needs a positive lattice");
  const IntVector& d = *l.positivity().grading;
  Int total = d.dot(c);
  std::vector<IntVector> out;
  if (total < 0) return out;
  const Index m = l.rank();
  std::vector<Index> rows;
  {
    std::vector<Index> sel;
    std::function<bool(Index)> pick = [&](Index start) {
      if (static_cast<Index>(sel.size()) == m) {
        IntMatrix sub(m, m);
        for (Index i = 0; i < m; ++i) sub.row(i) = l.basis().row(sel[i]);
        if (determinant(sub) != 0) {
          rows = sel;
          return true;
        }
        return false;
      }
      for (Index r = start; r < l.ambient_dimension(); ++r) {
        sel.push_back(r);
        if (pick(r + 1)) return true;
        sel.pop_back();
      }
      return false;
    };
    pick(0);
  }
  if (rows.empty()) throw std::runtime_error("no invertible row subset");
  RationalMatrix w(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) w(i, j) = Rational(l.basis()(rows[i], j));
  RationalMatrix inv = RationalMatrix::Identity(m, m);
  for (Index c2 = 0; c2 < m; ++c2) {
    Index p = -1;
    for (Index r = c2; r < m; ++r)
      if (w(r, c2) != 0) {
        p = r;
        break;
      }
    if (p == -1) throw std::runtime_error("singular row subset");
    w.row(p).swap(w.row(c2));
    inv.row(p).swap(inv.row(c2));
    Rational pivot = w(c2, c2);
    w.row(c2) /= pivot;
    inv.row(c2) /= pivot;
    for (Index r = 0; r < m; ++r)
      if (r != c2 && w(r, c2) != 0) {
        Rational f = w(r, c2);
        w.row(r) -= f * w.row(c2);
        inv.row(r) -= f * inv.row(c2);
      }
  }
  RationalVector zlo(m), zhi(m);
  for (Index j = 0; j < m; ++j) {
    Rational lo = 0, hi = 0;
    for (Index i = 0; i < m; ++i) {
      Rational wlo = Rational(-c(rows[i]));
      Rational whi =
          Rational(total) / Rational(d(rows[i])) - Rational(c(rows[i]));
      if (inv(j, i) >= 0) {
        lo += inv(j, i) * wlo;
        hi += inv(j, i) * whi;
      } else {
        lo += inv(j, i) * whi;
        hi += inv(j, i) * wlo;
      }
    }
    zlo(j) = lo;
    zhi(j) = hi;
  }
  std::vector<Int> z(m);
  std::function<void(Index)> scan = [&](Index j) {
    if (j == m) {
      IntVector zz(m);
      for (Index i = 0; i < m; ++i) zz(i) = z[i];
      IntVector u = c + l.basis() * zz;
      for (Index i = 0; i < u.size(); ++i)
        if (u(i) < 0) return;
      out.push_back(u);
      return;
    }
    for (Int v = rational_ceil(zlo(j)); v <= rational_floor(zhi(j)); ++v) {
      z[j] = v;
      scan(j + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end(), lex_less_vec);
  return out;
}

// Random unimodular 2x2 built from elementary operations.
inline IntMatrix random_unimodular2(std::mt19937& rng, int steps = 6) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<long> shear(-3, 3);
  IntMatrix m = IntMatrix::Identity(2, 2);
  for (int s = 0; s < steps; ++s) {
    IntMatrix e = IntMatrix::Identity(2, 2);
    switch (coin(rng)) {
      case 0: e(0, 1) = Int(shear(rng)); break;
      case 1: e(1, 0) = Int(shear(rng)); break;
      default:
        e(0, 0) = 0; e(1, 1) = 0; e(0, 1) = 1; e(1, 0) = -1;
        break;
    }
    m = m * e;
  }
  return m;
}

}  // namespace latticecm::testing

#endif  // LATTICECM_TESTS_HELPERS_HPP
