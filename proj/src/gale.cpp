#include "latticecm/gale.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "latticecm/errors.hpp"

namespace latticecm {

namespace {

void require_codim2(const GaleDiagram& g) {
  if (g.dim() != 2)
    throw Error(ErrorCode::WrongCodim, "operation requires codimension 2");
}

Int cross(const GaleDiagram& g, Index i, Index j) {
  return cross2(g.points(i, 0), g.points(i, 1), g.points(j, 0), g.points(j, 1));
}

// Advance a k-combination of {0, ..., n-1}; false after the last one.
bool next_combination(std::vector<Index>& sel, Index n) {
  const Index k = static_cast<Index>(sel.size());
  for (Index i = k; i-- > 0;) {
    if (sel[i] != n - k + i) {
      ++sel[i];
      for (Index j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Index> first_combination(Index k) {
  std::vector<Index> sel(k);
  for (Index i = 0; i < k; ++i) sel[i] = i;
  return sel;
}

}  // namespace

GaleDiagram gale_diagram(const Lattice& l) { return GaleDiagram{l.basis()}; }

bool is_mixed(const IntMatrix& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    bool pos = false, neg = false;
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) > 0) pos = true;
      if (a(i, j) < 0) neg = true;
    }
    if (!pos || !neg) return false;
  }
  return true;
}

bool is_dominating(const IntMatrix& a) {
  const Index n = a.rows(), m = a.cols();
  const Index kmax = std::min(n, m);
  // 1x1 submatrices are never mixed, so k starts at 2.  Exhaustive over
  // row and column subsets with early exit; desk-scale sizes.
  for (Index k = 2; k <= kmax; ++k) {
    std::vector<Index> rsel = first_combination(k);
    do {
      std::vector<Index> csel = first_combination(k);
      do {
        bool mixed = true;
        for (Index j = 0; j < k && mixed; ++j) {
          bool pos = false, neg = false;
          for (Index i = 0; i < k; ++i) {
            const Int& v = a(rsel[i], csel[j]);
            if (v > 0) pos = true;
            if (v < 0) neg = true;
          }
          mixed = pos && neg;
        }
        if (mixed) return false;
      } while (next_combination(csel, m));
    } while (next_combination(rsel, n));
  }
  return true;
}

bool is_imbalanced(const GaleDiagram& g) {
  require_codim2(g);
  for (Index i = 0; i < g.size(); ++i)
    if (g.points(i, 0) != 0 && g.points(i, 1) < 0) return false;
  return true;
}

int open_quadrant(const Int& x, const Int& y) {
  if (x > 0 && y > 0) return 1;
  if (x < 0 && y > 0) return 2;
  if (x < 0 && y < 0) return 3;
  if (x > 0 && y < 0) return 4;
  return 0;
}

QuadrantCoverage quadrant_coverage(const GaleDiagram& g) {
  require_codim2(g);
  QuadrantCoverage c;
  for (Index i = 0; i < g.size(); ++i) {
    int q = open_quadrant(g.points(i, 0), g.points(i, 1));
    if (q != 0) c.open[q - 1] = true;
  }
  return c;
}

Index ray_count(const GaleDiagram& g) {
  require_codim2(g);
  std::set<std::pair<Int, Int>> rays;
  for (Index i = 0; i < g.size(); ++i) {
    Int x = g.points(i, 0), y = g.points(i, 1);
    if (x == 0 && y == 0)
      throw Error(ErrorCode::ZeroPoint, "Gale diagram contains the zero point");
    Int gcd_v = gcd(x, y);  // nonnegative, nonzero
    rays.emplace(x / gcd_v, y / gcd_v);
  }
  return static_cast<Index>(rays.size());
}

std::vector<Index> angular_sort_upper(const GaleDiagram& g) {
  require_codim2(g);
  std::vector<Index> idx;
  for (Index i = 0; i < g.size(); ++i)
    if (g.points(i, 1) >= 0) idx.push_back(i);
  auto cls = [&](Index i) {
    if (g.points(i, 1) > 0) return 1;
    return g.points(i, 0) > 0 ? 0 : 2;  // positive or negative x-axis
  };
  std::sort(idx.begin(), idx.end(), [&](Index i, Index j) {
    int ci = cls(i), cj = cls(j);
    if (ci != cj) return ci < cj;
    if (ci == 1) {
      Int c = cross(g, i, j);
      if (c != 0) return c > 0;
    }
    return i < j;
  });
  return idx;
}

std::optional<IntMatrix> search_unimodular_witness(const Lattice& l,
                                                   WitnessTarget target,
                                                   Index bound) {
  if (l.rank() != 2)
    throw Error(ErrorCode::WrongCodim, "witness search requires rank 2");
  const IntMatrix& b = l.basis();
  auto satisfies = [&](const IntMatrix& m) {
    GaleDiagram g{b * m};
    return target == WitnessTarget::imbalanced ? is_imbalanced(g)
                                               : quadrant_coverage(g).all();
  };
  IntMatrix id = IntMatrix::Identity(2, 2);
  if (satisfies(id)) return id;
  // Shells of increasing max-entry, row-major lexicographic within a
  // shell, unimodular candidates only.
  for (Index s = 1; s <= bound; ++s) {
    long lo = -static_cast<long>(s), hi = static_cast<long>(s);
    for (long e0 = lo; e0 <= hi; ++e0)
      for (long e1 = lo; e1 <= hi; ++e1)
        for (long e2 = lo; e2 <= hi; ++e2)
          for (long e3 = lo; e3 <= hi; ++e3) {
            long mx = std::max({std::abs(e0), std::abs(e1), std::abs(e2),
                                std::abs(e3)});
            if (mx != s) continue;
            long det = e0 * e3 - e1 * e2;
            if (det != 1 && det != -1) continue;
            IntMatrix m(2, 2);
            m << e0, e1, e2, e3;
            if (m == id) continue;
            if (satisfies(m)) return m;
          }
  }
  return std::nullopt;
}

}  // namespace latticecm
