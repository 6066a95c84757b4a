#ifndef LATTICECM_LATTICE_HPP
#define LATTICECM_LATTICE_HPP

#include <optional>

#include "latticecm/numeric.hpp"

namespace latticecm {

// Outcome of the positivity test L \cap N^n = {0}.  Exactly one of
// `grading` (strictly positive integer vector d with B^T d = 0) and
// `witness` (nonzero nonnegative element of L) is present.
struct PositivityResult {
  bool positive = false;
  std::optional<IntVector> grading;
  std::optional<IntVector> witness;
};

PositivityResult matrix_positivity(const IntMatrix& basis);

// A full-column-rank sublattice L = ZB of Z^n, given by its basis matrix.
// Values are immutable; the canonical form (row-style HNF of the
// transposed basis) and the positivity result are computed at
// construction, so instances are safe to share between threads.
class Lattice {
 public:
  // Validates: full column rank, no zero rows, ambient dimension >= 2.
  static Lattice from_basis(IntMatrix basis);

  Index ambient_dimension() const { return basis_.rows(); }
  Index rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  const IntMatrix& canonical_form() const { return canonical_; }
  const PositivityResult& positivity() const { return positivity_; }
  bool is_positive() const { return positivity_.positive; }

 private:
  Lattice(IntMatrix basis, IntMatrix canonical, PositivityResult positivity)
      : basis_(std::move(basis)),
        canonical_(std::move(canonical)),
        positivity_(std::move(positivity)) {}

  IntMatrix basis_;
  IntMatrix canonical_;
  PositivityResult positivity_;
};

// L^sat = { u : q u in L for some positive integer q }, computed by
// clearing the invariant factors out of the Smith decomposition of the
// basis.  Contains L with finite index and has the same rank.
Lattice saturate(const Lattice& l);

// Index [L^sat : L] = product of the invariant factors of the basis;
// equals 1 exactly when L is saturated.
Int saturation_index(const Lattice& l);

// Canonical-form comparison; independent of the choice of basis.
bool lattices_equal(const Lattice& a, const Lattice& b);

// Membership of a vector in the lattice.
bool lattice_contains(const Lattice& l, const IntVector& u);

}  // namespace latticecm

#endif  // LATTICECM_LATTICE_HPP
