#include "latticecm/transform.hpp"

#include "latticecm/errors.hpp"
#include "latticecm/exactlin.hpp"

namespace latticecm {

namespace {

// Search cap for the integer direction v; the constructions below always
// find v well inside this bound.
constexpr long kSearchCap = 1000000;

Int dot2(const IntVector& a, const IntVector& b) {
  return a(0) * b(0) + a(1) * b(1);
}

Int cross_v(const IntVector& a, const IntVector& b) {
  return cross2(a(0), a(1), b(0), b(1));
}

IntVector point2(const Int& x, const Int& y) {
  IntVector v(2);
  v << x, y;
  return v;
}

// Sign pattern of the four open quadrants, 1-based.
void quadrant_signs(int q, int& sx, int& sy) {
  sx = (q == 1 || q == 4) ? 1 : -1;
  sy = (q == 1 || q == 2) ? 1 : -1;
}

// Smallest (max-norm, then lexicographic) integer v in the open quadrant
// q with p.v >= 0 and r.v >= 0.
IntVector find_direction(int q, const IntVector& p, const IntVector& r) {
  int sx, sy;
  quadrant_signs(q, sx, sy);
  for (long s = 1; s <= kSearchCap; ++s) {
    for (long x = -s; x <= s; ++x)
      for (long y = -s; y <= s; ++y) {
        if (std::max(std::abs(x), std::abs(y)) != s) continue;
        if (x * sx <= 0 || y * sy <= 0) continue;
        IntVector v = point2(x, y);
        if (dot2(p, v) >= 0 && dot2(r, v) >= 0) return v;
      }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no admissible direction v within the search cap");
}

}  // namespace

const char* transform_case_name(TransformCase c) {
  switch (c) {
    case TransformCase::dependent_pairs: return "dependent_pairs";
    case TransformCase::cone_Q1: return "cone_Q1";
    case TransformCase::cone_Q2: return "cone_Q2";
    case TransformCase::cone_Q3: return "cone_Q3";
    case TransformCase::cone_Q4: return "cone_Q4";
    case TransformCase::axes: return "axes";
    case TransformCase::generic: return "generic";
  }
  return "unknown";
}

TransformResult four_quadrants_to_imbalanced(const IntMatrix& b) {
  if (b.rows() != 4 || b.cols() != 2)
    throw Error(ErrorCode::DimensionMismatch, "expected a 4x2 matrix");
  // One row per open quadrant; the permutation is recorded and the
  // result keeps the original row order (row permutations commute with
  // right multiplication).
  std::array<Index, 4> at{-1, -1, -1, -1};
  for (Index i = 0; i < 4; ++i) {
    int q = open_quadrant(b(i, 0), b(i, 1));
    if (q == 0 || at[q - 1] != -1)
      throw Error(ErrorCode::QuadrantNotCovered,
                  "rows must meet all four open quadrants");
    at[q - 1] = i;
  }
  if (!matrix_positivity(b).positive)
    throw Error(ErrorCode::NotPositive, "lattice is not positive");

  std::array<IntVector, 4> p;  // p[q-1] = the row in quadrant q
  for (int q = 0; q < 4; ++q) p[q] = b.row(at[q]).transpose();

  TransformResult res;
  res.quadrant_row = at;
  Int c13 = cross_v(p[0], p[2]);
  Int c24 = cross_v(p[1], p[3]);

  if (c13 == 0 && c24 == 0) {
    // Every row of BM gets a zero entry: columns are (cross(b1, .),
    // cross(b2, .)) and each row is parallel to b1 or b2.
    res.case_tag = TransformCase::dependent_pairs;
    res.m = IntMatrix(2, 2);
    res.m << -p[0](1), -p[1](1), p[0](0), p[1](0);
  } else {
    // Use an independent diagonal pair (d1, d2); its cone contains one of
    // the two off-diagonal open quadrants.  v lives there; M is built
    // from the row w in the opposite off-diagonal quadrant, which makes
    // the w-row of BM land on an axis and every other row satisfy the
    // imbalance inequality through b.v >= 0.
    int qv;
    IntVector d1, d2;
    if (c13 != 0) {
      d1 = p[0];
      d2 = p[2];
      // cross(b1, b3) > 0 means the sweep from b1 to b3 is < pi, so the
      // cone covers Q2; otherwise it covers Q4.
      qv = c13 > 0 ? 2 : 4;
    } else {
      d1 = p[1];
      d2 = p[3];
      // Sweep from Q2 to Q4 counterclockwise covers Q3, clockwise Q1.
      qv = c24 > 0 ? 3 : 1;
    }
    IntVector v = find_direction(qv, d1, d2);
    int qw = (qv + 1) % 4 + 1;  // opposite quadrant, 1-based
    const IntVector& w = p[qw - 1];
    res.case_tag = qv == 1   ? TransformCase::cone_Q1
                   : qv == 2 ? TransformCase::cone_Q2
                   : qv == 3 ? TransformCase::cone_Q3
                             : TransformCase::cone_Q4;
    res.v = v;
    res.m = IntMatrix(2, 2);
    res.m << w(1), v(0), -w(0), v(1);
  }

  res.transformed_basis = b * res.m;
  if (determinant(res.m) == 0)
    throw Error(ErrorCode::Internal, "transform produced a singular matrix");
  if (!is_imbalanced(GaleDiagram{res.transformed_basis}))
    throw Error(ErrorCode::Internal, "transform failed to imbalance the diagram");
  return res;
}

TransformResult imbalanced_to_four_quadrants(const IntMatrix& b) {
  if (b.cols() != 2)
    throw Error(ErrorCode::WrongCodim, "expected an n x 2 matrix");
  for (Index i = 0; i < b.rows(); ++i)
    if (b.row(i).isZero(0))
      throw Error(ErrorCode::ZeroRow, "matrix has a zero row");
  GaleDiagram g{b};
  if (!is_imbalanced(g))
    throw Error(ErrorCode::NotImbalanced, "Gale diagram is not imbalanced");
  if (ray_count(g) < 4)
    throw Error(ErrorCode::TooFewRays, "Gale diagram spans fewer than four rays");
  if (!matrix_positivity(b).positive)
    throw Error(ErrorCode::NotPositive, "lattice is not positive");

  TransformResult res;
  bool all_axes = true;
  for (Index i = 0; i < b.rows(); ++i)
    if (b(i, 0) != 0 && b(i, 1) != 0) all_axes = false;

  if (all_axes) {
    res.case_tag = TransformCase::axes;
    res.m = IntMatrix(2, 2);
    res.m << 1, -1, 1, 1;
  } else {
    std::vector<Index> upper = angular_sort_upper(g);
    Index ia = upper.front(), id = upper.back();
    IntVector ba = b.row(ia).transpose(), bd = b.row(id).transpose();
    // Mixedness of a positive lattice puts rows strictly inside the right
    // and left halves of the upper half-plane.
    if (ba(0) <= 0 || bd(0) >= 0)
      throw Error(ErrorCode::Internal, "unexpected extremal rays");
    Index ic = -1;
    for (Index i : upper)
      if (cross_v(ba, b.row(i).transpose()) > 0 &&
          cross_v(b.row(i).transpose(), bd) > 0) {
        ic = i;
        break;
      }
    if (ic == -1)
      throw Error(ErrorCode::Internal, "no ray strictly between the extremes");
    IntVector bc = b.row(ic).transpose();
    Index ij = -1;
    for (Index i = 0; i < b.rows(); ++i)
      if (b(i, 0) == 0 && b(i, 1) < 0) {
        ij = i;
        break;
      }
    if (ij == -1)
      throw Error(ErrorCode::Internal, "no downward axis point in the diagram");

    // s = k*b_a + b_c with the smallest k >= 1 making s_1 > 0; its ray
    // lies strictly between b_a and b_c.  Symmetrically for t.
    IntVector s = ba + bc;
    for (Int k = 2; s(0) <= 0; ++k) s = (ba * k + bc).eval();
    IntVector t = bc + bd;
    for (Int k = 2; t(0) >= 0; ++k) t = (bc + bd * k).eval();

    res.case_tag = TransformCase::generic;
    res.s = s;
    res.t = t;
    res.row_a = ia;
    res.row_c = ic;
    res.row_d = id;
    res.row_j = ij;
    res.m = IntMatrix(2, 2);
    res.m << -s(1), t(1), s(0), -t(0);
  }

  res.transformed_basis = b * res.m;
  if (determinant(res.m) == 0)
    throw Error(ErrorCode::Internal, "transform produced a singular matrix");
  if (!quadrant_coverage(GaleDiagram{res.transformed_basis}).all())
    throw Error(ErrorCode::Internal, "transform failed to reach all quadrants");
  return res;
}

IntMatrix block_embed(const IntMatrix& b0, Index m) {
  if (m < 2)
    throw Error(ErrorCode::InvalidArgument, "codimension must be at least 2");
  if (b0.cols() != 2)
    throw Error(ErrorCode::DimensionMismatch, "seed block must be n x 2");
  if (m == 2) return b0;
  const Index n = b0.rows();
  IntMatrix b = IntMatrix::Zero(n + 2 * (m - 2), m);
  b.block(0, 0, n, 2) = b0;
  for (Index i = 0; i < m - 2; ++i) {
    b(n + 2 * i, 2 + i) = 1;
    b(n + 2 * i + 1, 2 + i) = -1;
  }
  return b;
}

IntMatrix block_extend_transform(const IntMatrix& m0, Index m) {
  if (m < 2)
    throw Error(ErrorCode::InvalidArgument, "codimension must be at least 2");
  if (m0.rows() != 2 || m0.cols() != 2)
    throw Error(ErrorCode::DimensionMismatch, "seed transform must be 2x2");
  IntMatrix big = IntMatrix::Identity(m, m);
  big.block(0, 0, 2, 2) = m0;
  return big;
}

IntMatrix four_quadrant_seed(Index k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "family index must be >= 1");
  IntMatrix b(4, 2);
  b << 1, 1, -1, Int(1 + k), -2, -3, 1, -1;
  return b;
}

IntMatrix imbalanced_seed(Index k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "family index must be >= 1");
  IntMatrix b(4, 2);
  b << 2, 1, 1, 2, -1, Int(2 + k), 0, -1;
  return b;
}

}  // namespace latticecm
