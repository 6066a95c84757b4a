#ifndef LATTICECM_GALE_HPP
#define LATTICECM_GALE_HPP

#include <array>
#include <optional>
#include <vector>

#include "latticecm/lattice.hpp"
#include "latticecm/numeric.hpp"

namespace latticecm {

// The rows b_1, ..., b_n of a basis matrix, read as n points of Z^m.
struct GaleDiagram {
  IntMatrix points;  // row i is b_i

  Index size() const { return points.rows(); }
  Index dim() const { return points.cols(); }
};

GaleDiagram gale_diagram(const Lattice& l);

// Open quadrants of the plane met by at least one point; points on the
// axes set no flag.
struct QuadrantCoverage {
  std::array<bool, 4> open{};  // Q1..Q4

  bool all() const { return open[0] && open[1] && open[2] && open[3]; }
  bool none() const { return !open[0] && !open[1] && !open[2] && !open[3]; }
};

// Every column has a strictly positive and a strictly negative entry.
bool is_mixed(const IntMatrix& a);

// No square submatrix (any rows, any columns) is mixed.
bool is_dominating(const IntMatrix& a);

// Every point has first coordinate 0 or second coordinate >= 0 (m = 2).
bool is_imbalanced(const GaleDiagram& g);

QuadrantCoverage quadrant_coverage(const GaleDiagram& g);

// 1..4 for the open quadrants, 0 for points on an axis.
int open_quadrant(const Int& x, const Int& y);

// Number of distinct rays {t b : t >= 0} spanned by the points (m = 2).
Index ray_count(const GaleDiagram& g);

// Indices of the points in the closed upper half-plane (y >= 0), sorted
// by angle from the positive x-axis, strictly increasing; ties (same ray)
// are broken by the original index.  Comparisons use exact cross-product
// signs.
std::vector<Index> angular_sort_upper(const GaleDiagram& g);

enum class WitnessTarget { imbalanced, four_quadrants };

// Bounded deterministic search for a unimodular 2x2 M (entries in
// [-bound, bound]) such that the Gale diagram of B*M satisfies the target
// predicate.  The identity is tested first; absence of a witness within
// the bound proves nothing.
std::optional<IntMatrix> search_unimodular_witness(const Lattice& l,
                                                   WitnessTarget target,
                                                   Index bound);

}  // namespace latticecm

#endif  // LATTICECM_GALE_HPP
