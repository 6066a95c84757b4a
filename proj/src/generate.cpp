#include "latticecm/generate.hpp"

#include "latticecm/errors.hpp"
#include "latticecm/exactlin.hpp"

namespace latticecm {

const char* pair_direction_name(PairDirection d) {
  return d == PairDirection::ci_lattice ? "ci_lattice" : "ci_saturation";
}

namespace {

// Every emitted seed is checked for saturation, positivity and its Gale
// predicate; the families are constructed to satisfy all three, but the
// guarantees are verified, not assumed.
IntMatrix verified_seed(PairDirection direction, Index k) {
  IntMatrix b = direction == PairDirection::ci_lattice ? four_quadrant_seed(k)
                                                       : imbalanced_seed(k);
  SmithResult s = smith_normal_form(b);
  for (const Int& d : s.invariant_factors())
    if (d != 1)
      throw Error(ErrorCode::Internal, "seed family lost saturation");
  if (!matrix_positivity(b).positive)
    throw Error(ErrorCode::Internal, "seed family lost positivity");
  GaleDiagram g{b};
  if (direction == PairDirection::ci_lattice) {
    if (!quadrant_coverage(g).all())
      throw Error(ErrorCode::Internal, "seed family lost quadrant coverage");
  } else {
    if (!is_imbalanced(g) || ray_count(g) < 4)
      throw Error(ErrorCode::Internal, "seed family lost its Gale predicate");
  }
  return b;
}

}  // namespace

CertifiedPair generate_pair(Index m, PairDirection direction, Index k) {
  if (m < 2)
    throw Error(ErrorCode::InvalidArgument, "codimension must be at least 2");
  if (k < 1)
    throw Error(ErrorCode::InvalidArgument, "family index must be >= 1");

  IntMatrix b0 = verified_seed(direction, k);
  TransformResult tr = direction == PairDirection::ci_lattice
                           ? four_quadrants_to_imbalanced(b0)
                           : imbalanced_to_four_quadrants(b0);
  Int det_m0 = abs(determinant(tr.m));
  if (det_m0 == 1)
    throw Error(ErrorCode::DegenerateTransform,
                "transform is unimodular; the pair would be saturated");

  IntMatrix b = block_embed(b0, m);
  IntMatrix big_m = block_extend_transform(tr.m, m);
  Lattice lattice = Lattice::from_basis(b * big_m);
  Lattice saturation = Lattice::from_basis(b);

  if (!lattices_equal(saturate(lattice), saturation))
    throw Error(ErrorCode::Internal, "block construction broke the saturation");
  if (saturation_index(lattice) != det_m0)
    throw Error(ErrorCode::Internal, "saturation index differs from |det M0|");

  CISide ci_side = direction == PairDirection::ci_lattice ? CISide::lattice
                                                          : CISide::saturation;
  const Lattice& ci_l = ci_side == CISide::lattice ? lattice : saturation;
  const Lattice& noncm_l = ci_side == CISide::lattice ? saturation : lattice;

  auto ci_cert = certify_complete_intersection(ci_l);
  if (!ci_cert)
    throw Error(ErrorCode::Internal, "constructed CI side failed to certify");
  auto noncm_cert = certify_not_cm(noncm_l);
  if (!noncm_cert)
    throw Error(ErrorCode::Internal, "constructed non-CM side failed to certify");

  return CertifiedPair{std::move(lattice), std::move(saturation),
                       std::move(det_m0),  ci_side,
                       std::move(*ci_cert), std::move(*noncm_cert),
                       false};
}

}  // namespace latticecm
