#ifndef LATTICECM_CERTIFY_HPP
#define LATTICECM_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "latticecm/complex.hpp"
#include "latticecm/fiber.hpp"
#include "latticecm/gale.hpp"
#include "latticecm/lattice.hpp"

namespace latticecm {

// Self-validating witness that a lattice ideal is a complete
// intersection: a dominating basis, an imbalanced codimension-2 basis, or
// a block-diagonal basis whose blocks all certify.
enum class CIKind { dominating, imbalanced_codim2, block_of_certified };

const char* ci_kind_name(CIKind k);

struct CICertificate {
  CIKind kind;
  IntMatrix witness;  // the basis exhibiting the property
  std::vector<CICertificate> children;  // nonempty only for blocks
};

// Witness that a lattice ideal is not Cohen-Macaulay: a fiber whose
// support complex has nonzero reduced homology above the codimension,
// i.e. a Betti number beta_{j,C} > 0 with j > codim.
struct NonCMCertificate {
  Fiber fiber;
  Index betti_index;  // j
  Index betti_value;  // beta_{j,C}
  Index codim;        // m
};

// Returns a certificate, or nothing; absence is NOT a disproof (the
// underlying criteria quantify over all bases / all fibers).
std::optional<CICertificate> certify_complete_intersection(
    const Lattice& l, Index search_bound = 5);

// Searches the syzygy fiber, then the fibers of the column-subset degree
// sums, then any caller-supplied degrees, for a Betti witness above the
// codimension.  Absence is NOT a Cohen-Macaulayness proof.
std::optional<NonCMCertificate> certify_not_cm(
    const Lattice& l, const std::vector<IntVector>& extra_degrees = {});

// Re-checks a certificate from scratch against the lattice it is claimed
// for: predicate recheck plus span equality for CI, full fiber
// enumeration and boundary-rank recomputation for non-CM.
bool revalidate(const CICertificate& cert, const Lattice& l);
bool revalidate(const NonCMCertificate& cert, const Lattice& l);

// Visibly block-diagonal structure of a basis matrix, detected through
// connected components of the shared-support graph on rows and columns.
struct BlockDecomposition {
  std::vector<IntMatrix> blocks;
  std::vector<std::vector<Index>> block_rows;
  std::vector<std::vector<Index>> block_cols;
};

BlockDecomposition block_decomposition(const IntMatrix& a);

enum class CISide { lattice, saturation };

// A lattice together with its saturation, a complete-intersection
// certificate for one side and a non-Cohen-Macaulay certificate for the
// other.
struct CertifiedPair {
  Lattice lattice;
  Lattice saturation;
  Int index;  // [L^sat : L], >= 2
  CISide ci_side;
  CICertificate ci_cert;
  NonCMCertificate noncm_cert;
  bool verified = false;
};

struct VerificationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Recomputes every claim of the pair independently: saturation equality,
// index, positivity, certificate validity on both sides.
VerificationReport verify_pair(const CertifiedPair& p);

}  // namespace latticecm

#endif  // LATTICECM_CERTIFY_HPP
