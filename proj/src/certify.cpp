#include "latticecm/certify.hpp"

#include <algorithm>
#include <numeric>

#include "latticecm/errors.hpp"
#include "latticecm/exactlin.hpp"

namespace latticecm {

const char* ci_kind_name(CIKind k) {
  switch (k) {
    case CIKind::dominating: return "dominating";
    case CIKind::imbalanced_codim2: return "imbalanced_codim2";
    case CIKind::block_of_certified: return "block_of_certified";
  }
  return "unknown";
}

BlockDecomposition block_decomposition(const IntMatrix& a) {
  const Index n = a.rows(), m = a.cols();
  // Union-find on columns; a row joins every column it touches.
  std::vector<Index> parent(m);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index i = 0; i < n; ++i) {
    Index first = -1;
    for (Index j = 0; j < m; ++j) {
      if (a(i, j) == 0) continue;
      if (first == -1)
        first = j;
      else
        parent[find(j)] = find(first);
    }
  }
  std::vector<Index> roots;
  for (Index j = 0; j < m; ++j) {
    Index r = find(j);
    if (std::find(roots.begin(), roots.end(), r) == roots.end())
      roots.push_back(r);
  }
  BlockDecomposition dec;
  for (Index r : roots) {
    std::vector<Index> cols;
    for (Index j = 0; j < m; ++j)
      if (find(j) == r) cols.push_back(j);
    std::vector<Index> rows;
    for (Index i = 0; i < n; ++i) {
      bool touches = false;
      for (Index j : cols)
        if (a(i, j) != 0) touches = true;
      if (touches) rows.push_back(i);
    }
    IntMatrix blk(rows.size(), cols.size());
    for (size_t ri = 0; ri < rows.size(); ++ri)
      for (size_t ci = 0; ci < cols.size(); ++ci)
        blk(ri, ci) = a(rows[ri], cols[ci]);
    dec.blocks.push_back(std::move(blk));
    dec.block_rows.push_back(std::move(rows));
    dec.block_cols.push_back(std::move(cols));
  }
  return dec;
}

// The order of attempts follows the certificates' generality on concrete
// bases: the codimension-2 imbalance test, then block decomposition, then
// the dominating test, then a bounded change-of-basis search.
std::optional<CICertificate> certify_complete_intersection(const Lattice& l,
                                                           Index search_bound) {
  if (!l.is_positive())
    throw Error(ErrorCode::NotPositive, "certification requires a positive lattice");
  const IntMatrix& b = l.basis();

  if (l.rank() == 2 && is_imbalanced(GaleDiagram{b}))
    return CICertificate{CIKind::imbalanced_codim2, b, {}};

  BlockDecomposition dec = block_decomposition(b);
  if (dec.blocks.size() > 1) {
    std::vector<CICertificate> children;
    bool ok = true;
    for (const IntMatrix& blk : dec.blocks) {
      auto child = certify_complete_intersection(Lattice::from_basis(blk),
                                                 search_bound);
      if (!child) {
        ok = false;
        break;
      }
      children.push_back(std::move(*child));
    }
    if (ok) return CICertificate{CIKind::block_of_certified, b, std::move(children)};
  }

  if (is_dominating(b)) return CICertificate{CIKind::dominating, b, {}};

  if (l.rank() == 2) {
    auto m = search_unimodular_witness(l, WitnessTarget::imbalanced, search_bound);
    if (m) return CICertificate{CIKind::imbalanced_codim2, b * *m, {}};
  }
  return std::nullopt;
}

std::optional<NonCMCertificate> certify_not_cm(
    const Lattice& l, const std::vector<IntVector>& extra_degrees) {
  if (!l.is_positive())
    throw Error(ErrorCode::NotPositive, "certification requires a positive lattice");
  const Index m = l.rank();
  const Index n = l.ambient_dimension();

  std::vector<IntVector> degrees;
  IntVector syz = IntVector::Zero(n);
  for (Index j = 0; j < m; ++j) syz += positive_part(l.basis().col(j));
  degrees.push_back(syz);
  // Proper column subsets by decreasing size, lexicographic within a
  // size; the full set is the syzygy degree already queued.
  for (Index size = m - 1; size >= 1; --size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      IntVector deg = IntVector::Zero(n);
      for (Index j = 0; j < m; ++j)
        if (pick[j]) deg += positive_part(l.basis().col(j));
      degrees.push_back(deg);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (const IntVector& d : extra_degrees) degrees.push_back(d);

  for (const IntVector& deg : degrees) {
    if (deg.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "degree vector has wrong length");
    Fiber f = fiber_of(l, deg);
    HomologyProfile profile = reduced_homology_ranks(support_complex(f));
    // Homology dimensions run up to min_dim + ranks.size() - 1, so Betti
    // indices run one higher.
    const int j_max = profile.min_dim + static_cast<int>(profile.ranks.size());
    for (int j = static_cast<int>(m) + 1; j <= j_max; ++j) {
      Index rank = profile.rank_at(j - 1);
      if (rank > 0)
        return NonCMCertificate{f, static_cast<Index>(j), rank, m};
    }
  }
  return std::nullopt;
}

bool revalidate(const CICertificate& cert, const Lattice& l) {
  // The witness must span the lattice it certifies.
  Lattice witness_lattice = Lattice::from_basis(cert.witness);
  if (!lattices_equal(witness_lattice, l)) return false;
  switch (cert.kind) {
    case CIKind::dominating:
      return cert.children.empty() && is_dominating(cert.witness);
    case CIKind::imbalanced_codim2:
      return cert.children.empty() && cert.witness.cols() == 2 &&
             is_imbalanced(GaleDiagram{cert.witness});
    case CIKind::block_of_certified: {
      BlockDecomposition dec = block_decomposition(cert.witness);
      if (dec.blocks.size() < 2 ||
          dec.blocks.size() != cert.children.size())
        return false;
      for (size_t i = 0; i < dec.blocks.size(); ++i)
        if (!revalidate(cert.children[i], Lattice::from_basis(dec.blocks[i])))
          return false;
      return true;
    }
  }
  return false;
}

bool revalidate(const NonCMCertificate& cert, const Lattice& l) {
  if (!lattices_equal(cert.fiber.lattice(), l)) return false;
  if (cert.betti_index <= cert.codim || cert.betti_value < 1) return false;
  if (cert.codim != l.rank()) return false;
  Index recomputed = betti_number(l, cert.betti_index, fiber_of(l, cert.fiber.representative()));
  return recomputed == cert.betti_value;
}

VerificationReport verify_pair(const CertifiedPair& p) {
  VerificationReport report;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({name, ok, detail});
  };

  try {
    Lattice sat = saturate(p.lattice);
    bool ok = lattices_equal(sat, p.saturation);
    add("saturation_matches", ok,
        ok ? "saturate(lattice) equals the stored saturation"
           : "saturate(lattice) differs from the stored saturation");
  } catch (const Error& e) {
    add("saturation_matches", false, e.what());
  }

  Int idx = saturation_index(p.lattice);
  add("saturation_index", idx == p.index && p.index >= 2,
      "recomputed index " + idx.get_str() + ", stored " + p.index.get_str());

  add("lattice_positive", p.lattice.is_positive(),
      p.lattice.is_positive() ? "lattice is positive" : "lattice is not positive");
  add("saturation_positive", p.saturation.is_positive(),
      p.saturation.is_positive() ? "saturation is positive"
                                 : "saturation is not positive");

  const Lattice& ci_l = p.ci_side == CISide::lattice ? p.lattice : p.saturation;
  const Lattice& noncm_l = p.ci_side == CISide::lattice ? p.saturation : p.lattice;

  try {
    bool ok = revalidate(p.ci_cert, ci_l);
    add("ci_certificate", ok,
        std::string("kind ") + ci_kind_name(p.ci_cert.kind) +
            (ok ? " rechecks" : " failed recheck"));
  } catch (const Error& e) {
    add("ci_certificate", false, e.what());
  }

  try {
    bool ok = revalidate(p.noncm_cert, noncm_l);
    add("noncm_certificate", ok,
        "beta_{" + std::to_string(p.noncm_cert.betti_index) + "} = " +
            std::to_string(p.noncm_cert.betti_value) +
            (ok ? " rechecks" : " failed recheck"));
  } catch (const Error& e) {
    add("noncm_certificate", false, e.what());
  }

  return report;
}

}  // namespace latticecm
