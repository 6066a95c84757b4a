#ifndef LATTICECM_EXACTLIN_HPP
#define LATTICECM_EXACTLIN_HPP

#include <optional>
#include <vector>

#include "latticecm/numeric.hpp"

namespace latticecm {

// Row-style Hermite normal form H = U * A with U unimodular.
// Pivot entries are positive, entries above each pivot are reduced into
// [0, pivot), zero rows come last.  H is the canonical form of the row
// space of A over the integers.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
};

HermiteResult hermite_normal_form(const IntMatrix& a);

// Smith normal form D = U * A * V with U, V unimodular, D diagonal,
// diagonal entries positive and each dividing the next.
struct SmithResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Int> invariant_factors() const;
};

SmithResult smith_normal_form(const IntMatrix& a);

// Exact determinant / rank by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);
Index integer_rank(const IntMatrix& a);

// Basis of the right null space of A over the rationals; empty when A
// has full column rank.
std::vector<RationalVector> rational_kernel_basis(const IntMatrix& a);

// Integer solution of A z = w, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& w);

}  // namespace latticecm

#endif  // LATTICECM_EXACTLIN_HPP
