#ifndef LATTICECM_COMPLEX_HPP
#define LATTICECM_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "latticecm/fiber.hpp"
#include "latticecm/numeric.hpp"

namespace latticecm {

// A simplicial complex on [n], stored by its inclusion-maximal faces as
// vertex bitsets.  Two degenerate states are distinct and representable:
// the void complex (no faces at all, empty facet list) and the empty
// complex {emptyset} (a single empty facet).
class SupportComplex {
 public:
  SupportComplex(Index vertex_count, std::vector<std::uint64_t> facets);

  static SupportComplex void_complex(Index vertex_count);
  static SupportComplex empty_complex(Index vertex_count);

  Index vertex_count() const { return vertex_count_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  // Largest face dimension; -1 for {emptyset}, meaningless for void.
  int dimension() const;

 private:
  Index vertex_count_;
  std::vector<std::uint64_t> facets_;  // maximal, sorted, deduplicated
};

// Faces of Delta_C: all subsets of supports of the nonnegative members of
// the fiber.  Void when the fiber has no nonnegative member; {emptyset}
// when the only member is the zero vector.
SupportComplex support_complex(const Fiber& f);

// Join: faces F1 union F2 with the second complex relabeled past the
// first.  The void complex acts as the identity.
SupportComplex join(const SupportComplex& d1, const SupportComplex& d2);

// Join with the two-point complex.
SupportComplex suspension(const SupportComplex& d);

// Coefficient field: the rationals, or GF(p) for a prime p.
struct FieldSpec {
  std::optional<std::uint64_t> prime;  // nullopt = rationals

  static FieldSpec rationals() { return {}; }
  static FieldSpec gf(std::uint64_t p);  // validates primality
};

// Ranks of reduced simplicial homology, computed from exact ranks of the
// boundary matrices of the augmented chain complex:
//   rank H~_j = f_j - rank d_j - rank d_{j+1}.
struct HomologyProfile {
  int min_dim = -1;           // ranks[0] is H~_{-1}
  std::vector<Index> ranks;   // empty for the void complex

  Index rank_at(int j) const {
    int idx = j - min_dim;
    if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
    return ranks[idx];
  }
};

HomologyProfile reduced_homology_ranks(const SupportComplex& d,
                                       const FieldSpec& field = FieldSpec::rationals());

// beta_{j,C} = rank H~_{j-1}(Delta_C); requires the lattice positive and
// the fiber to belong to it.
Index betti_number(const Lattice& l, Index j, const Fiber& c,
                   const FieldSpec& field = FieldSpec::rationals());

}  // namespace latticecm

#endif  // LATTICECM_COMPLEX_HPP
