// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails.  Runtime limits are enforced in-process.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "latticecm/certify.hpp"
#include "latticecm/complex.hpp"
#include "latticecm/generate.hpp"
#include "latticecm/transform.hpp"

using namespace latticecm;
using namespace latticecm::testing;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::ostringstream&)> body;  // throws on failure
  double time_limit_s;
};

void expect(bool cond, const std::string& message) {
  if (!cond) throw std::runtime_error(message);
}

const IntMatrix kPaperBasis = make_matrix(4, 2, {2, -1, 3, 3, -1, 5, -4, -7});

void criterion_golden_example(std::ostringstream& log) {
  Lattice l = Lattice::from_basis(kPaperBasis);
  FiberMembers m = nonneg_members(syzygy_fiber(l));
  std::vector<IntVector> expected{
      make_vector({0, 3, 6, 4}), make_vector({1, 0, 1, 11}),
      make_vector({2, 6, 5, 0}), make_vector({3, 3, 0, 7})};
  expect(m.members.size() == 4, "fiber must have exactly 4 members");
  for (size_t i = 0; i < 4; ++i)
    expect(m.members[i] == expected[i], "member mismatch");
  SupportComplex d = support_complex(syzygy_fiber(l));
  std::vector<std::uint64_t> facets{0b0111, 0b1011, 0b1101, 0b1110};
  expect(d.facets().size() == 4, "hollow tetrahedron has 4 facets");
  for (std::uint64_t f : facets)
    expect(std::find(d.facets().begin(), d.facets().end(), f) != d.facets().end(),
           "missing facet");
  expect(betti_number(l, 3, syzygy_fiber(l)) == 1, "beta_3 over Q");
  expect(betti_number(l, 3, syzygy_fiber(l), FieldSpec::gf(32003)) == 1,
         "beta_3 over GF(32003)");
  log << "4 members, hollow tetrahedron, beta_3 = 1 over Q and GF(32003)";
}

void criterion_prop34_suite(std::ostringstream& log) {
  std::mt19937 rng(340);
  std::uniform_int_distribution<long> mag(1, 9);
  int done = 0;
  while (done < 300) {
    IntMatrix b(4, 2);
    b << mag(rng), mag(rng), -mag(rng), mag(rng), -mag(rng), -mag(rng),
        mag(rng), -mag(rng);
    if (integer_rank(b) != 2) continue;
    Lattice l = Lattice::from_basis(b);
    FiberMembers m = nonneg_members(syzygy_fiber(l));
    expect(m.members.size() == 4, "syzygy fiber must have exactly 4 members");
    IntVector b1 = b.col(0), b2 = b.col(1);
    std::vector<IntVector> expected{
        positive_part(b1) + positive_part(b2),
        positive_part(b1) + negative_part(b2),
        negative_part(b1) + positive_part(b2),
        negative_part(b1) + negative_part(b2)};
    for (const IntVector& e : expected) {
      bool found = false;
      for (const IntVector& u : m.members)
        if (u == e) found = true;
      expect(found, "sign-part member missing");
    }
    expect(betti_number(l, 3, syzygy_fiber(l)) == 1, "beta_3 must be 1");
    ++done;
  }
  log << "300/300 random four-quadrant 4x2 matrices";
}

void criterion_transform_roundtrips(std::ostringstream& log) {
  std::mt19937 rng(350);
  std::uniform_int_distribution<long> mag(1, 9);
  int done = 0;
  while (done < 200) {
    IntMatrix b(4, 2);
    b << mag(rng), mag(rng), -mag(rng), mag(rng), -mag(rng), -mag(rng),
        mag(rng), -mag(rng);
    if (integer_rank(b) != 2) continue;
    TransformResult r = four_quadrants_to_imbalanced(b);
    expect(determinant(r.m) != 0, "singular M");
    expect(is_imbalanced(GaleDiagram{r.transformed_basis}),
           "transform must imbalance");
    ++done;
  }
  std::uniform_int_distribution<long> small(1, 6);
  std::uniform_int_distribution<long> ynn(0, 6);
  done = 0;
  while (done < 200) {
    IntMatrix b(4, 2);
    b << small(rng), ynn(rng), small(rng), small(rng), -small(rng), ynn(rng),
        0, -small(rng);
    GaleDiagram g{b};
    if (ray_count(g) < 4 || !is_imbalanced(g)) continue;
    if (!matrix_positivity(b).positive) continue;
    TransformResult r = imbalanced_to_four_quadrants(b);
    expect(determinant(r.m) != 0, "singular M");
    expect(quadrant_coverage(GaleDiagram{r.transformed_basis}).all(),
           "transform must reach all quadrants");
    if (r.case_tag == TransformCase::generic) {
      expect(open_quadrant(r.transformed_basis(r.row_a, 0),
                           r.transformed_basis(r.row_a, 1)) == 2,
             "row a must land in Q2");
      expect(open_quadrant(r.transformed_basis(r.row_c, 0),
                           r.transformed_basis(r.row_c, 1)) == 1,
             "row c must land in Q1");
      expect(open_quadrant(r.transformed_basis(r.row_d, 0),
                           r.transformed_basis(r.row_d, 1)) == 4,
             "row d must land in Q4");
      expect(open_quadrant(r.transformed_basis(r.row_j, 0),
                           r.transformed_basis(r.row_j, 1)) == 3,
             "row j must land in Q3");
    }
    ++done;
  }
  log << "200 + 200 preconditioned transforms";
}

void criterion_suspension_identity(std::ostringstream& log) {
  std::mt19937 rng(360);
  std::uniform_int_distribution<int> nverts(1, 7);
  std::uniform_int_distribution<int> nfacets(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int v = nverts(rng);
    std::uniform_int_distribution<std::uint64_t> bits(
        0, (std::uint64_t{1} << v) - 1);
    std::vector<std::uint64_t> facets;
    int k = nfacets(rng);
    for (int i = 0; i < k; ++i) facets.push_back(bits(rng));
    SupportComplex d(v, std::move(facets));
    HomologyProfile before = reduced_homology_ranks(d);
    HomologyProfile after = reduced_homology_ranks(suspension(d));
    for (int j = -1; j <= d.dimension() + 1; ++j)
      expect(after.rank_at(j + 1) == before.rank_at(j),
             "suspension must shift homology by one");
    expect(after.rank_at(-1) == 0 || d.is_void(),
           "suspension of a nonvoid complex is nonempty");
  }
  log << "100 random complexes on <= 7 vertices";
}

void criterion_theorem37(std::ostringstream& log) {
  int pairs = 0;
  for (Index m = 2; m <= 5; ++m)
    for (PairDirection dir :
         {PairDirection::ci_lattice, PairDirection::ci_saturation})
      for (Index k = 1; k <= 3; ++k) {
        CertifiedPair p = generate_pair(m, dir, k);
        VerificationReport rep = verify_pair(p);
        if (!rep.all_passed()) {
          std::ostringstream msg;
          msg << "verification failed for m=" << m << " dir="
              << pair_direction_name(dir) << " k=" << k << ":";
          for (const auto& c : rep.checks)
            if (!c.passed) msg << " [" << c.name << ": " << c.detail << "]";
          throw std::runtime_error(msg.str());
        }
        expect(lattices_equal(saturate(p.lattice), p.saturation),
               "saturation mismatch");
        expect(p.index >= 2, "index must be >= 2");
        expect(p.noncm_cert.betti_index == m + 1, "witness must sit at m+1");
        expect(p.noncm_cert.betti_value == 1, "witness value must be 1");
        ++pairs;
      }
  expect(pairs == 24, "24 pairs expected");
  log << "24/24 pairs verified for m in {2,3,4,5}, both directions, k in {1,2,3}";
}

void criterion_saturation_oracle(std::ostringstream& log) {
  std::mt19937 rng(370);
  int done = 0;
  while (done < 100) {
    Index n = 3 + done % 2;
    Index m = 1 + done % 2;
    IntMatrix b = random_basis(rng, n, m, -5, 5);
    Lattice l = Lattice::from_basis(b);
    Lattice sat = saturate(l);
    Int idx = saturation_index(l);
    // Box-restricted comparison against the multiple-search oracle.
    std::vector<long> u(n, -2);
    while (true) {
      IntVector uu(n);
      for (Index i = 0; i < n; ++i) uu(i) = Int(u[i]);
      bool brute = false;
      for (Int q = 1; q <= idx && !brute; ++q)
        brute = lattice_contains(l, (q * uu).eval());
      expect(lattice_contains(sat, uu) == brute,
             "saturation disagrees with the multiple-search oracle");
      Index i = 0;
      while (i < n && ++u[i] > 2) u[i++] = -2;
      if (i == n) break;
    }
    ++done;
  }
  log << "100 random lattices against the q-multiple oracle";
}

void criterion_homology_sanity(std::ostringstream& log) {
  for (Index k = 2; k <= 5; ++k) {
    std::uint64_t full = (std::uint64_t{1} << (k + 1)) - 1;
    std::vector<std::uint64_t> facets;
    for (Index v = 0; v <= k; ++v)
      facets.push_back(full & ~(std::uint64_t{1} << v));
    HomologyProfile p = reduced_homology_ranks(SupportComplex(k + 1, facets));
    for (int j = -1; j <= static_cast<int>(k); ++j)
      expect(p.rank_at(j) == (j == static_cast<int>(k) - 1 ? 1 : 0),
             "simplex boundary homology mismatch");
  }
  std::mt19937 rng(380);
  int done = 0;
  while (done < 20) {
    Index n = 3 + done % 2;
    Index m = 1 + done % 2;
    IntMatrix b = random_matrix(rng, n, m, -5, 5);
    bool zero = false;
    for (Index i = 0; i < n; ++i)
      if (b.row(i).isZero(0)) zero = true;
    if (zero || integer_rank(b) != m) continue;
    if (!matrix_positivity(b).positive) continue;
    Lattice l = Lattice::from_basis(b);
    expect(betti_number(l, 0, fiber_of(l, IntVector::Zero(n))) == 1,
           "beta_0 of the zero fiber must be 1");
    ++done;
  }
  log << "simplex boundaries k=2..5 and 20 random beta_0 checks";
}

void criterion_fiber_oracle(std::ostringstream& log) {
  std::mt19937 rng(390);
  std::uniform_int_distribution<long> rep_dist(0, 8);
  int done = 0;
  while (done < 100) {
    Index n = 3 + done % 2;
    Index m = 1 + done % 2;
    IntMatrix b = random_matrix(rng, n, m, -6, 6);
    bool zero = false;
    for (Index i = 0; i < n; ++i)
      if (b.row(i).isZero(0)) zero = true;
    if (zero || integer_rank(b) != m) continue;
    if (!matrix_positivity(b).positive) continue;
    Lattice l = Lattice::from_basis(b);
    IntVector rep(n);
    for (Index i = 0; i < n; ++i) rep(i) = Int(rep_dist(rng));
    FiberMembers fast = nonneg_members(fiber_of(l, rep));
    std::vector<IntVector> slow = members_box_brute(l, rep);
    expect(fast.members.size() == slow.size(),
           "member count disagrees with the box oracle");
    for (size_t i = 0; i < slow.size(); ++i)
      expect(fast.members[i] == slow[i], "member list disagrees");
    ++done;
  }
  log << "100 random positive lattices against the box oracle";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 golden example (Example 3.3 data)", criterion_golden_example, 1.0},
      {"2 Prop 3.4 property suite (300 cases)", criterion_prop34_suite, 60.0},
      {"3 transform round-trips (200 + 200)", criterion_transform_roundtrips, 120.0},
      {"4 suspension identity (100 complexes)", criterion_suspension_identity, 60.0},
      {"5 Theorem 3.7 end-to-end (24 pairs)", criterion_theorem37, 300.0},
      {"6 saturation oracle equivalence (100 lattices)", criterion_saturation_oracle, 120.0},
      {"7 homology sanity (spheres + beta_0)", criterion_homology_sanity, 60.0},
      {"8 fiber enumeration oracle (100 fibers)", criterion_fiber_oracle, 120.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    std::string error;
    try {
      c.body(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = error.empty() && elapsed < c.time_limit_s;
    if (!ok) ++failures;
    std::printf("%s %s: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                error.empty() ? log.str().c_str() : error.c_str(), elapsed,
                elapsed < c.time_limit_s ? "" : ", over the time limit");
  }
  return failures;
}
