#include "latticecm/lattice.hpp"

#include "latticecm/errors.hpp"
#include "latticecm/exactlin.hpp"
#include "latticecm/linineq.hpp"

namespace latticecm {

// Positivity of ZB is equivalent (over the rationals, by scaling) to the
// infeasibility of  { B z >= 0, 1^T B z >= 1 }.  Infeasible: the
// Fourier-Motzkin multipliers lambda satisfy sum_i lambda_i b_i = -lambda_c
// * (sum of rows), so d = 1 + lambda/lambda_c is a strictly positive
// vector with B^T d = 0.  Feasible: the rational point scales to an
// integer z with B z a nonzero nonnegative lattice element.
PositivityResult matrix_positivity(const IntMatrix& basis) {
  const Index n = basis.rows(), m = basis.cols();
  RationalMatrix a(n + 1, m);
  RationalVector b = RationalVector::Zero(n + 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) a(i, j) = Rational(basis(i, j));
  for (Index j = 0; j < m; ++j) {
    Rational s = 0;
    for (Index i = 0; i < n; ++i) s += a(i, j);
    a(n, j) = s;
  }
  b(n) = 1;

  FeasibilityResult fr = solve_rational_inequalities(a, b);
  PositivityResult res;
  if (!fr.feasible) {
    res.positive = true;
    // A positive lattice always has a mixed basis matrix.
    for (Index j = 0; j < m; ++j) {
      bool pos = false, neg = false;
      for (Index i = 0; i < n; ++i) {
        if (basis(i, j) > 0) pos = true;
        if (basis(i, j) < 0) neg = true;
      }
      if (!pos || !neg)
        throw Error(ErrorCode::Internal, "positive lattice with unmixed basis");
    }
    const Rational& lc = fr.multipliers(n);
    if (lc <= 0)
      throw Error(ErrorCode::Internal, "positivity certificate degenerate");
    RationalVector d(n);
    for (Index i = 0; i < n; ++i) d(i) = 1 + fr.multipliers(i) / lc;
    IntVector grading = primitive(clear_denominators(d));
    for (Index i = 0; i < n; ++i)
      if (grading(i) < 1)
        throw Error(ErrorCode::Internal, "grading vector not strictly positive");
    IntVector check = basis.transpose() * grading;
    if (!check.isZero(0))
      throw Error(ErrorCode::Internal, "grading vector not orthogonal to basis");
    res.grading = grading;
  } else {
    res.positive = false;
    IntVector z = clear_denominators(fr.point);
    IntVector u = basis * z;
    for (Index i = 0; i < n; ++i)
      if (u(i) < 0) throw Error(ErrorCode::Internal, "positivity witness invalid");
    if (u.isZero(0))
      throw Error(ErrorCode::Internal, "positivity witness vanished");
    res.witness = u;
  }
  return res;
}

Lattice Lattice::from_basis(IntMatrix basis) {
  if (basis.rows() < 1 || basis.cols() < 1)
    throw Error(ErrorCode::InvalidArgument, "empty basis matrix");
  if (basis.rows() < 2)
    throw Error(ErrorCode::AmbientTooSmall,
                "ambient dimension must be at least 2");
  for (Index i = 0; i < basis.rows(); ++i)
    if (basis.row(i).isZero(0))
      throw Error(ErrorCode::ZeroRow,
                  "basis row " + std::to_string(i + 1) + " is zero");
  if (integer_rank(basis) != basis.cols())
    throw Error(ErrorCode::NotFullRank, "basis does not have full column rank");
  IntMatrix canonical = hermite_normal_form(basis.transpose()).h;
  PositivityResult pos = matrix_positivity(basis);
  return Lattice(std::move(basis), std::move(canonical), std::move(pos));
}

Lattice saturate(const Lattice& l) {
  SmithResult s = smith_normal_form(l.basis());
  IntMatrix w = l.basis() * s.v;
  // Column i of B*V equals d_i times the i-th saturated generator.
  for (Index i = 0; i < w.cols(); ++i) {
    const Int& di = s.d(i, i);
    for (Index r = 0; r < w.rows(); ++r) {
      if (w(r, i) % di != 0)
        throw Error(ErrorCode::Internal, "saturation: inexact division");
      w(r, i) /= di;
    }
  }
  return Lattice::from_basis(std::move(w));
}

Int saturation_index(const Lattice& l) {
  SmithResult s = smith_normal_form(l.basis());
  Int idx = 1;
  for (const Int& d : s.invariant_factors()) idx *= d;
  return idx;
}

bool lattices_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "lattices live in different ambient dimensions");
  if (a.rank() != b.rank()) return false;
  return a.canonical_form() == b.canonical_form();
}

bool lattice_contains(const Lattice& l, const IntVector& u) {
  if (u.size() != l.ambient_dimension())
    throw Error(ErrorCode::DimensionMismatch, "vector/lattice size mismatch");
  return solve_integer(l.basis(), u).has_value();
}

}  // namespace latticecm
