#include "latticecm/fiber.hpp"

#include <algorithm>

#include "latticecm/errors.hpp"
#include "latticecm/exactlin.hpp"
#include "latticecm/linineq.hpp"

namespace latticecm {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

Fiber::Fiber(Lattice lattice, IntVector representative)
    : lattice_(std::move(lattice)), representative_(std::move(representative)) {
  if (representative_.size() != lattice_.ambient_dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "fiber representative has wrong length");
}

bool Fiber::same_fiber(const Fiber& other) const {
  if (!lattices_equal(lattice_, other.lattice_)) return false;
  IntVector diff = representative_ - other.representative_;
  return solve_integer(lattice_.basis(), diff).has_value();
}

IntVector Fiber::canonical_representative() const {
  if (lattice_.is_positive()) {
    FiberMembers m = nonneg_members(*this);
    if (!m.members.empty()) return m.members.front();
  }
  return reduce_mod_lattice(lattice_, representative_);
}

Fiber fiber_of(const Lattice& l, const IntVector& u) { return Fiber(l, u); }

Fiber syzygy_fiber(const Lattice& l) {
  IntVector deg = IntVector::Zero(l.ambient_dimension());
  for (Index j = 0; j < l.rank(); ++j) deg += positive_part(l.basis().col(j));
  return Fiber(l, deg);
}

FiberMembers nonneg_members(const Fiber& f) {
  const Lattice& l = f.lattice();
  if (!l.is_positive())
    throw Error(ErrorCode::NotPositive,
                "fiber enumeration requires a positive lattice");
  // Members are c + B z >= 0 over integer z.
  RationalMatrix a = to_rational(l.basis());
  RationalVector b(l.ambient_dimension());
  for (Index i = 0; i < b.size(); ++i) b(i) = Rational(-f.representative()(i));
  std::vector<IntVector> zs = enumerate_integer_solutions(a, b);
  FiberMembers out;
  out.members.reserve(zs.size());
  for (const IntVector& z : zs)
    out.members.push_back(f.representative() + l.basis() * z);
  std::sort(out.members.begin(), out.members.end(), lex_less);
  return out;
}

IntVector reduce_mod_lattice(const Lattice& l, IntVector u) {
  if (u.size() != l.ambient_dimension())
    throw Error(ErrorCode::DimensionMismatch, "vector/lattice size mismatch");
  const IntMatrix& h = l.canonical_form();  // rows generate L, row-HNF
  for (Index i = 0; i < h.rows(); ++i) {
    Index pivot = -1;
    for (Index j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        pivot = j;
        break;
      }
    if (pivot == -1) continue;
    Int q = floor_div(u(pivot), h(i, pivot));
    if (q != 0) u -= (q * h.row(i).transpose()).eval();
  }
  return u;
}

}  // namespace latticecm
