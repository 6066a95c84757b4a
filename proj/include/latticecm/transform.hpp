#ifndef LATTICECM_TRANSFORM_HPP
#define LATTICECM_TRANSFORM_HPP

#include <array>
#include <vector>

#include "latticecm/gale.hpp"
#include "latticecm/numeric.hpp"

namespace latticecm {

enum class TransformCase {
  dependent_pairs,  // both diagonal pairs linearly dependent
  cone_Q1,
  cone_Q2,
  cone_Q3,
  cone_Q4,  // v found in the named open quadrant
  axes,     // all points on the coordinate axes
  generic   // rightmost/leftmost/between construction
};

const char* transform_case_name(TransformCase c);

// Result of a Gale-diagram change of basis B -> B*M.
struct TransformResult {
  IntMatrix m;                  // nonsingular m x m
  IntMatrix transformed_basis;  // B * M, original row order
  TransformCase case_tag;

  // Auxiliary data, populated per branch: the search vector v for the
  // four-quadrant transform, s/t and the chosen row indices for the
  // imbalanced transform, and the quadrant permutation (row index of the
  // point in Q1..Q4) for the four-quadrant transform.
  IntVector v;
  IntVector s, t;
  std::array<Index, 4> quadrant_row{-1, -1, -1, -1};
  Index row_a = -1, row_c = -1, row_d = -1, row_j = -1;
};

// For a 4x2 matrix whose rows meet all four open quadrants (a
// non-Cohen-Macaulay Gale diagram), produce nonsingular M with G_{BM}
// imbalanced (a complete-intersection diagram).
TransformResult four_quadrants_to_imbalanced(const IntMatrix& b);

// For an imbalanced n x 2 matrix spanning at least four rays over a
// positive lattice, produce nonsingular M with G_{BM} meeting all four
// open quadrants.
TransformResult imbalanced_to_four_quadrants(const IntMatrix& b);

// The paper's block construction: B_o unchanged for m = 2, otherwise
// block-diagonal with m-2 copies of H = (1, -1)^T appended.
IntMatrix block_embed(const IntMatrix& b0, Index m);

// M_o extended by an identity block to act on the embedded matrix.
IntMatrix block_extend_transform(const IntMatrix& m0, Index m);

// Built-in seed families: for every k >= 1 the matrices span positive,
// saturated lattices and satisfy the family's Gale predicate.  Checked at
// emission, never assumed.
IntMatrix four_quadrant_seed(Index k);      // rows (1,1),(-1,1+k),(-2,-3),(1,-1)
IntMatrix imbalanced_seed(Index k);         // rows (2,1),(1,2),(-1,2+k),(0,-1)

}  // namespace latticecm

#endif  // LATTICECM_TRANSFORM_HPP
