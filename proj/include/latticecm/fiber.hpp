#ifndef LATTICECM_FIBER_HPP
#define LATTICECM_FIBER_HPP

#include <vector>

#include "latticecm/lattice.hpp"
#include "latticecm/numeric.hpp"

namespace latticecm {

// A congruence class of Z^n modulo a lattice, held as (lattice,
// representative).  Two fibers over the same lattice are equal exactly
// when the representatives differ by a lattice element.
class Fiber {
 public:
  Fiber(Lattice lattice, IntVector representative);

  const Lattice& lattice() const { return lattice_; }
  const IntVector& representative() const { return representative_; }

  bool same_fiber(const Fiber& other) const;

  // Stable identity for caching: the lexicographically smallest
  // nonnegative member when the lattice is positive and one exists,
  // otherwise the HNF-reduced residue of the representative.
  IntVector canonical_representative() const;

 private:
  Lattice lattice_;
  IntVector representative_;
};

Fiber fiber_of(const Lattice& l, const IntVector& u);

// The fiber of (B_1)_+ + ... + (B_m)_+, the paper's witness location for
// high Betti numbers.
Fiber syzygy_fiber(const Lattice& l);

// The complete, duplicate-free, lexicographically sorted list of
// coordinatewise nonnegative members of a fiber.
struct FiberMembers {
  std::vector<IntVector> members;
};

// Requires a positive lattice: a recession direction of {z : Bz >= -c}
// would be a nonzero element of L intersected with N^n.
FiberMembers nonneg_members(const Fiber& f);

// HNF-reduced coset representative (used for fiber identity when no
// nonnegative member exists).
IntVector reduce_mod_lattice(const Lattice& l, IntVector u);

}  // namespace latticecm

#endif  // LATTICECM_FIBER_HPP
