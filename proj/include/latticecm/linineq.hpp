#ifndef LATTICECM_LININEQ_HPP
#define LATTICECM_LININEQ_HPP

#include <vector>

#include "latticecm/numeric.hpp"

namespace latticecm {

// Feasibility of the system  A z >= b  over rational z, decided by
// Fourier-Motzkin elimination with multiplier tracking.
//
// Feasible: `point` is one rational solution.
// Infeasible: `multipliers` is a nonnegative rational vector lambda with
// lambda^T A = 0 and lambda^T b > 0, a Farkas-style certificate that can
// be checked by plain matrix arithmetic.
struct FeasibilityResult {
  bool feasible = false;
  RationalVector point;
  RationalVector multipliers;
};

FeasibilityResult solve_rational_inequalities(const RationalMatrix& a,
                                              const RationalVector& b);

// All integer z with A z >= b, enumerated by eliminating trailing
// variables to bound each coordinate and scanning the integer range.
// The solution set must be bounded (the callers guarantee this through
// lattice positivity); an unbounded direction raises an error.
std::vector<IntVector> enumerate_integer_solutions(const RationalMatrix& a,
                                                   const RationalVector& b);

}  // namespace latticecm

#endif  // LATTICECM_LININEQ_HPP
