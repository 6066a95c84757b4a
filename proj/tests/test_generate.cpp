#include <doctest.h>

#include "helpers.hpp"
#include "latticecm/errors.hpp"
#include "latticecm/exactlin.hpp"
#include "latticecm/generate.hpp"

using namespace latticecm;
using namespace latticecm::testing;

TEST_CASE("generate_pair: codim 2, CI on the lattice side") {
  CertifiedPair p = generate_pair(2, PairDirection::ci_lattice, 1);
  CHECK(p.ci_side == CISide::lattice);
  // The saturation is the four-quadrant seed, the lattice the imbalanced
  // transform of it.
  CHECK(quadrant_coverage(gale_diagram(p.saturation)).all());
  CHECK(is_imbalanced(gale_diagram(p.lattice)));
  CHECK(lattices_equal(saturate(p.lattice), p.saturation));
  CHECK(p.index >= 2);
  CHECK(saturation_index(p.lattice) == p.index);
  CHECK(p.ci_cert.kind == CIKind::imbalanced_codim2);
  CHECK(p.noncm_cert.betti_index == 3);
}

TEST_CASE("generate_pair: codim 3, CI on the saturation side") {
  CertifiedPair p = generate_pair(3, PairDirection::ci_saturation, 1);
  CHECK(p.ci_side == CISide::saturation);
  CHECK(p.lattice.ambient_dimension() == 6);
  CHECK(p.lattice.rank() == 3);
  CHECK(lattices_equal(saturate(p.lattice), p.saturation));
  CHECK(p.noncm_cert.betti_index == 4);
  CHECK(p.noncm_cert.betti_value == 1);
  CHECK(p.ci_cert.kind == CIKind::block_of_certified);
}

TEST_CASE("generate_pair: distinct family indices give distinct lattices") {
  CertifiedPair a = generate_pair(2, PairDirection::ci_lattice, 1);
  CertifiedPair b = generate_pair(2, PairDirection::ci_lattice, 2);
  CHECK_FALSE(lattices_equal(a.lattice, b.lattice));
  CHECK_FALSE(lattices_equal(a.saturation, b.saturation));
}

TEST_CASE("generate_pair: index equals |det M0| and is at least 2") {
  for (Index m = 2; m <= 4; ++m)
    for (Index k = 1; k <= 2; ++k) {
      CertifiedPair p = generate_pair(m, PairDirection::ci_lattice, k);
      CHECK(p.index == Int(k + 2));  // |det M0| for this family
      CHECK(p.index >= 2);
      CertifiedPair q = generate_pair(m, PairDirection::ci_saturation, k);
      CHECK(q.index == Int(21 + 6 * k));
      CHECK(q.index >= 2);
    }
}

TEST_CASE("generate_pair: argument validation") {
  CHECK_THROWS_AS((void)generate_pair(1, PairDirection::ci_lattice, 1), Error);
  CHECK_THROWS_AS((void)generate_pair(2, PairDirection::ci_lattice, 0), Error);
}
