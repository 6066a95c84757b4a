#ifndef LATTICECM_GENERATE_HPP
#define LATTICECM_GENERATE_HPP

#include "latticecm/certify.hpp"
#include "latticecm/transform.hpp"

namespace latticecm {

// Which side of the emitted pair is the complete intersection.
enum class PairDirection { ci_lattice, ci_saturation };

const char* pair_direction_name(PairDirection d);

// Constructs a certified pair (L, L^sat) of rank m where exactly one of
// the two lattice ideals is a complete intersection and the other is not
// Cohen-Macaulay.
//
// ci_lattice: seed B0(k) from the four-quadrant family, M0 from the
// imbalancing transform, B = block embedding, M = M0 extended by the
// identity; L = Z(BM) carries the CI certificate and ZB = L^sat the Betti
// witness.  ci_saturation runs the transforms the other way around.
//
// The pair is emitted unverified (verified = false); verify_pair
// recomputes every claim from scratch.
CertifiedPair generate_pair(Index m, PairDirection direction, Index k);

}  // namespace latticecm

#endif  // LATTICECM_GENERATE_HPP
