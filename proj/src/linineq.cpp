#include "latticecm/linineq.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "latticecm/errors.hpp"

namespace latticecm {

namespace {

// One inequality  coeffs . z >= rhs  together with the nonnegative
// combination of original rows that produced it.
struct Row {
  RationalVector coeffs;
  Rational rhs;
  RationalVector mult;
};

bool all_zero(const RationalVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

// Scale to a primitive integer coefficient/rhs pattern so duplicates can
// be recognized; scaling by a positive rational preserves the inequality
// and the validity of the multipliers.
void normalize(Row& r) {
  Int l = 1;
  for (Index i = 0; i < r.coeffs.size(); ++i)
    l = lcm(l, Int(r.coeffs(i).get_den()));
  l = lcm(l, Int(r.rhs.get_den()));
  Int g = 0;
  for (Index i = 0; i < r.coeffs.size(); ++i)
    g = gcd(g, Int(r.coeffs(i).get_num()) * (l / Int(r.coeffs(i).get_den())));
  g = gcd(g, Int(r.rhs.get_num()) * (l / Int(r.rhs.get_den())));
  if (g == 0) return;
  Rational s(l, g);
  s.canonicalize();
  r.coeffs *= s;
  r.rhs *= s;
  r.mult *= s;
}

using Key = std::pair<std::vector<Rational>, Rational>;

Key row_key(const Row& r) {
  std::vector<Rational> c(r.coeffs.data(), r.coeffs.data() + r.coeffs.size());
  return {std::move(c), r.rhs};
}

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    for (size_t i = 0; i < a.first.size(); ++i) {
      int c = cmp(a.first[i], b.first[i]);
      if (c != 0) return c < 0;
    }
    return cmp(a.second, b.second) < 0;
  }
};

// Eliminate variable `var`; `contradiction` receives the certificate row
// if a constant row 0 >= positive shows up.
std::vector<Row> eliminate(const std::vector<Row>& rows, Index var,
                           std::optional<Row>& contradiction) {
  std::vector<const Row*> pos, neg;
  std::vector<Row> out;
  std::map<Key, bool, KeyLess> seen;
  auto push = [&](Row r) {
    normalize(r);
    if (all_zero(r.coeffs)) {
      if (r.rhs > 0 && !contradiction) contradiction = r;
      if (r.rhs <= 0) return;  // trivially satisfied
    }
    auto key = row_key(r);
    if (seen.emplace(std::move(key), true).second) out.push_back(std::move(r));
  };
  for (const Row& r : rows) {
    int s = sgn(r.coeffs(var));
    if (s > 0)
      pos.push_back(&r);
    else if (s < 0)
      neg.push_back(&r);
    else
      push(r);
  }
  for (const Row* p : pos)
    for (const Row* n : neg) {
      Rational alpha = -n->coeffs(var);  // > 0
      Rational beta = p->coeffs(var);    // > 0
      Row r;
      r.coeffs = alpha * p->coeffs + beta * n->coeffs;
      r.coeffs(var) = 0;  // exact by construction
      r.rhs = alpha * p->rhs + beta * n->rhs;
      r.mult = alpha * p->mult + beta * n->mult;
      push(std::move(r));
    }
  return out;
}

// Bounds on variable `var` from rows whose only nonzero coefficient is at
// `var`.  Rows must already have all later variables eliminated.
struct Bounds {
  bool has_lower = false, has_upper = false, infeasible = false;
  Rational lower, upper;
};

Bounds bounds_for(const std::vector<Row>& rows, Index var) {
  Bounds b;
  for (const Row& r : rows) {
    int s = sgn(r.coeffs(var));
    if (s == 0) {
      if (all_zero(r.coeffs) && r.rhs > 0) b.infeasible = true;
      continue;
    }
    Rational v = r.rhs / r.coeffs(var);
    if (s > 0) {
      if (!b.has_lower || v > b.lower) b.lower = v;
      b.has_lower = true;
    } else {
      if (!b.has_upper || v < b.upper) b.upper = v;
      b.has_upper = true;
    }
  }
  if (b.has_lower && b.has_upper && b.lower > b.upper) b.infeasible = true;
  return b;
}

std::vector<Row> make_rows(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "inequality system: size mismatch");
  std::vector<Row> rows;
  rows.reserve(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    Row r;
    r.coeffs = a.row(i).transpose();
    r.rhs = b(i);
    r.mult = RationalVector::Zero(a.rows());
    r.mult(i) = 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

FeasibilityResult solve_rational_inequalities(const RationalMatrix& a,
                                              const RationalVector& b) {
  const Index m = a.cols();
  std::vector<std::vector<Row>> stage(m + 1);
  stage[m] = make_rows(a, b);
  std::optional<Row> contradiction;

  // Check the initial system for constant contradictions as well.
  for (const Row& r : stage[m])
    if (all_zero(r.coeffs) && r.rhs > 0 && !contradiction) contradiction = r;

  for (Index var = m - 1; var >= 0 && !contradiction; --var)
    stage[var] = eliminate(stage[var + 1], var, contradiction);

  FeasibilityResult res;
  if (contradiction) {
    res.feasible = false;
    res.multipliers = contradiction->mult;
    return res;
  }

  res.feasible = true;
  res.point = RationalVector::Zero(m);
  for (Index var = 0; var < m; ++var) {
    // stage[var + 1] constrains variables 0..var; earlier ones are fixed.
    std::vector<Row> fixed;
    for (const Row& r : stage[var + 1]) {
      Row f = r;
      for (Index j = 0; j < var; ++j) {
        f.rhs -= f.coeffs(j) * res.point(j);
        f.coeffs(j) = 0;
      }
      fixed.push_back(std::move(f));
    }
    Bounds bd = bounds_for(fixed, var);
    if (bd.infeasible)
      throw Error(ErrorCode::Internal, "back-substitution hit an empty range");
    if (bd.has_lower)
      res.point(var) = bd.lower;
    else if (bd.has_upper)
      res.point(var) = bd.upper;
    else
      res.point(var) = 0;
  }
  return res;
}

namespace {

void enumerate_rec(const std::vector<Row>& rows, Index var, Index m,
                   IntVector& prefix, std::vector<IntVector>& out) {
  if (var == m) {
    for (const Row& r : rows)
      if (r.rhs > 0) return;  // constant row violated
    out.push_back(prefix);
    return;
  }
  // Bound this variable by eliminating all later ones.
  std::optional<Row> contradiction;
  std::vector<Row> reduced = rows;
  for (Index v = m - 1; v > var; --v) reduced = eliminate(reduced, v, contradiction);
  if (contradiction) return;
  Bounds bd = bounds_for(reduced, var);
  if (bd.infeasible) return;
  if (!bd.has_lower || !bd.has_upper)
    throw Error(ErrorCode::Internal,
                "integer enumeration over an unbounded polyhedron");
  Int lo = rational_ceil(bd.lower);
  Int hi = rational_floor(bd.upper);
  for (Int v = lo; v <= hi; ++v) {
    prefix(var) = v;
    std::vector<Row> next;
    next.reserve(rows.size());
    bool dead = false;
    for (const Row& r : rows) {
      Row f = r;
      f.rhs -= f.coeffs(var) * Rational(v);
      f.coeffs(var) = 0;
      if (all_zero(f.coeffs)) {
        if (f.rhs > 0) {
          dead = true;
          break;
        }
        continue;
      }
      next.push_back(std::move(f));
    }
    if (!dead) enumerate_rec(next, var + 1, m, prefix, out);
  }
}

}  // namespace

std::vector<IntVector> enumerate_integer_solutions(const RationalMatrix& a,
                                                   const RationalVector& b) {
  const Index m = a.cols();
  std::vector<Row> rows = make_rows(a, b);
  for (Row& r : rows) r.mult = RationalVector();  // multipliers unused here
  IntVector prefix = IntVector::Zero(m);
  std::vector<IntVector> out;
  enumerate_rec(rows, 0, m, prefix, out);
  return out;
}

}  // namespace latticecm
