#include "latticecm/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "latticecm/errors.hpp"
#include "latticecm/exactlin.hpp"

namespace latticecm {

namespace {

constexpr Index kMaxVertices = 62;

std::vector<std::uint64_t> prune_to_maximal(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> maximal;
  for (std::uint64_t s : sets) {
    bool contained = false;
    for (std::uint64_t t : sets)
      if (t != s && (s & t) == s) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(s);
  }
  return maximal;
}

}  // namespace

SupportComplex::SupportComplex(Index vertex_count,
                               std::vector<std::uint64_t> facets)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw Error(ErrorCode::InvalidArgument, "unsupported vertex count");
  const std::uint64_t mask =
      vertex_count == 0 ? 0 : ((std::uint64_t{1} << vertex_count) - 1);
  for (std::uint64_t f : facets)
    if ((f & ~mask) != 0)
      throw Error(ErrorCode::InvalidArgument, "facet uses an unknown vertex");
  facets_ = prune_to_maximal(std::move(facets));
}

SupportComplex SupportComplex::void_complex(Index vertex_count) {
  return SupportComplex(vertex_count, {});
}

SupportComplex SupportComplex::empty_complex(Index vertex_count) {
  return SupportComplex(vertex_count, {0});
}

int SupportComplex::dimension() const {
  int d = -2;
  for (std::uint64_t f : facets_)
    d = std::max(d, static_cast<int>(std::popcount(f)) - 1);
  return d;
}

SupportComplex support_complex(const Fiber& f) {
  FiberMembers members = nonneg_members(f);
  std::vector<std::uint64_t> supports;
  supports.reserve(members.members.size());
  for (const IntVector& u : members.members) {
    std::uint64_t s = 0;
    for (Index i = 0; i < u.size(); ++i)
      if (u(i) != 0) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  return SupportComplex(f.lattice().ambient_dimension(), std::move(supports));
}

SupportComplex join(const SupportComplex& d1, const SupportComplex& d2) {
  // The void complex is the identity element of the join.
  if (d1.is_void()) return d2;
  if (d2.is_void()) return d1;
  const Index n = d1.vertex_count() + d2.vertex_count();
  std::vector<std::uint64_t> facets;
  facets.reserve(d1.facets().size() * d2.facets().size());
  for (std::uint64_t f1 : d1.facets())
    for (std::uint64_t f2 : d2.facets())
      facets.push_back(f1 | (f2 << d1.vertex_count()));
  return SupportComplex(n, std::move(facets));
}

SupportComplex suspension(const SupportComplex& d) {
  return join(d, SupportComplex(2, {1, 2}));
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
  if (p < 2) throw Error(ErrorCode::InvalidField, "field size must be >= 2");
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      throw Error(ErrorCode::InvalidField,
                  std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

namespace {

// Rank of a 0/+-1 boundary matrix over GF(p).
Index rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::uint64_t p) {
  if (m.empty()) return 0;
  const Index rows = static_cast<Index>(m.size());
  const Index cols = static_cast<Index>(m[0].size());
  auto modp = [&](std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + static_cast<std::int64_t>(p) : r;
  };
  Index rank = 0;
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index pivot = -1;
    for (Index r = rank; r < rows; ++r)
      if (modp(m[r][c]) != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(m[rank], m[pivot]);
    // Normalize pivot to 1 via modular inverse (Fermat).
    std::int64_t pv = modp(m[rank][c]);
    std::int64_t inv = 1, base = pv, e = static_cast<std::int64_t>(p) - 2;
    while (e > 0) {
      if (e & 1) inv = static_cast<std::int64_t>((__int128)inv * base % p);
      base = static_cast<std::int64_t>((__int128)base * base % p);
      e >>= 1;
    }
    for (Index j = c; j < cols; ++j)
      m[rank][j] = static_cast<std::int64_t>((__int128)modp(m[rank][j]) * inv % p);
    for (Index r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::int64_t f = modp(m[r][c]);
      if (f == 0) continue;
      for (Index j = c; j < cols; ++j)
        m[r][j] = modp(m[r][j] - static_cast<std::int64_t>((__int128)f * m[rank][j] % p));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

HomologyProfile reduced_homology_ranks(const SupportComplex& d,
                                       const FieldSpec& field) {
  HomologyProfile profile;
  if (d.is_void()) return profile;  // no faces, all ranks zero

  if (field.prime) FieldSpec::gf(*field.prime);  // validate

  // Downward closure of the facets, grouped by dimension.  The empty face
  // sits at dimension -1 and carries the augmentation.
  std::set<std::uint64_t> faces;
  std::vector<std::uint64_t> stack(d.facets().begin(), d.facets().end());
  while (!stack.empty()) {
    std::uint64_t f = stack.back();
    stack.pop_back();
    if (!faces.insert(f).second) continue;
    for (std::uint64_t bits = f; bits != 0;) {
      std::uint64_t low = bits & (~bits + 1);
      stack.push_back(f & ~low);
      bits ^= low;
    }
  }

  const int dim = d.dimension();
  std::vector<std::vector<std::uint64_t>> by_dim(dim + 2);
  for (std::uint64_t f : faces)
    by_dim[std::popcount(f)].push_back(f);  // index k holds dimension k-1
  for (auto& v : by_dim) std::sort(v.begin(), v.end());

  std::vector<std::map<std::uint64_t, Index>> pos(dim + 2);
  for (int k = 0; k <= dim + 1; ++k)
    for (Index i = 0; i < static_cast<Index>(by_dim[k].size()); ++i)
      pos[k][by_dim[k][i]] = i;

  // boundary_rank[k] = rank of the map from (k-1)-dimensional chains to
  // (k-2)-dimensional ones; indices follow by_dim.
  std::vector<Index> boundary_rank(dim + 3, 0);
  for (int k = 1; k <= dim + 1; ++k) {
    const auto& domain = by_dim[k];
    const auto& image = by_dim[k - 1];
    if (domain.empty() || image.empty()) continue;
    if (field.prime) {
      std::vector<std::vector<std::int64_t>> m(
          image.size(), std::vector<std::int64_t>(domain.size(), 0));
      for (Index c = 0; c < static_cast<Index>(domain.size()); ++c) {
        std::uint64_t f = domain[c];
        int sign = 1;
        for (std::uint64_t bits = f; bits != 0;) {
          std::uint64_t low = bits & (~bits + 1);
          m[pos[k - 1].at(f & ~low)][c] = sign;
          sign = -sign;
          bits ^= low;
        }
      }
      boundary_rank[k] = rank_mod_p(std::move(m), *field.prime);
    } else {
      IntMatrix m = IntMatrix::Zero(image.size(), domain.size());
      for (Index c = 0; c < static_cast<Index>(domain.size()); ++c) {
        std::uint64_t f = domain[c];
        int sign = 1;
        for (std::uint64_t bits = f; bits != 0;) {
          std::uint64_t low = bits & (~bits + 1);
          m(pos[k - 1].at(f & ~low), c) = sign;
          sign = -sign;
          bits ^= low;
        }
      }
      boundary_rank[k] = integer_rank(m);
    }
  }

  profile.min_dim = -1;
  profile.ranks.resize(dim + 2);
  for (int j = -1; j <= dim; ++j) {
    Index fj = static_cast<Index>(by_dim[j + 1].size());
    profile.ranks[j + 1] = fj - boundary_rank[j + 1] - boundary_rank[j + 2];
  }
  return profile;
}

Index betti_number(const Lattice& l, Index j, const Fiber& c,
                   const FieldSpec& field) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "Betti index must be >= 0");
  if (!l.is_positive())
    throw Error(ErrorCode::NotPositive, "Betti numbers require a positive lattice");
  if (!lattices_equal(l, c.lattice()))
    throw Error(ErrorCode::InvalidArgument, "fiber belongs to a different lattice");
  HomologyProfile profile = reduced_homology_ranks(support_complex(c), field);
  return profile.rank_at(static_cast<int>(j) - 1);
}

}  // namespace latticecm
