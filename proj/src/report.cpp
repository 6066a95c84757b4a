#include "latticecm/report.hpp"

#include <sstream>

#include "latticecm/io.hpp"

namespace latticecm {

Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_matrix(const IntMatrix& a) {
  Json rows = Json::array();
  for (const std::string& r : matrix_plain_rows(a)) rows.push_back(r);
  return rows;
}

Json json_ci_certificate(const CICertificate& c) {
  Json j;
  j["kind"] = ci_kind_name(c.kind);
  j["witness"] = json_matrix(c.witness);
  if (!c.children.empty()) {
    Json children = Json::array();
    for (const CICertificate& child : c.children)
      children.push_back(json_ci_certificate(child));
    j["children"] = std::move(children);
  }
  return j;
}

Json json_noncm_certificate(const NonCMCertificate& c) {
  Json j;
  j["fiber_degree"] = vector_to_string(c.fiber.representative());
  j["betti_index"] = c.betti_index;
  j["betti_value"] = c.betti_value;
  j["codim"] = c.codim;
  return j;
}

Json json_verification(const VerificationReport& r) {
  Json j;
  Json checks = Json::array();
  for (const VerificationCheck& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = r.all_passed();
  return j;
}

namespace {

Json json_field(const FieldSpec& field) {
  if (field.prime) return Json(std::to_string(*field.prime));
  return Json("q");
}

Json json_homology(const HomologyProfile& p) {
  Json j;
  j["first_dimension"] = p.min_dim;
  Json ranks = Json::array();
  for (Index r : p.ranks) ranks.push_back(r);
  j["ranks"] = std::move(ranks);
  return j;
}

Json json_facets(const SupportComplex& d) {
  Json facets = Json::array();
  for (std::uint64_t f : d.facets()) {
    Json verts = Json::array();
    for (Index v = 0; v < d.vertex_count(); ++v)
      if (f & (std::uint64_t{1} << v)) verts.push_back(v + 1);  // 1-based
    facets.push_back(std::move(verts));
  }
  return facets;
}

Json lattice_section(const Lattice& l) {
  Json j;
  j["ambient_dimension"] = l.ambient_dimension();
  j["rank"] = l.rank();
  j["positive"] = l.is_positive();
  if (l.positivity().grading)
    j["grading"] = vector_to_string(*l.positivity().grading);
  else
    j["grading"] = nullptr;
  if (l.positivity().witness)
    j["positivity_witness"] = vector_to_string(*l.positivity().witness);
  else
    j["positivity_witness"] = nullptr;
  Int idx = saturation_index(l);
  j["saturation_index"] = json_int(idx);
  j["saturated"] = idx == 1;
  j["canonical_form"] = json_matrix(l.canonical_form());
  return j;
}

Json gale_section(const Lattice& l) {
  Json j;
  GaleDiagram g = gale_diagram(l);
  j["mixed"] = is_mixed(l.basis());
  j["dominating"] = is_dominating(l.basis());
  if (l.rank() == 2) {
    j["imbalanced"] = is_imbalanced(g);
    QuadrantCoverage c = quadrant_coverage(g);
    Json quads = Json::array();
    for (int q = 0; q < 4; ++q)
      if (c.open[q]) quads.push_back("Q" + std::to_string(q + 1));
    j["quadrant_coverage"] = std::move(quads);
    j["ray_count"] = ray_count(g);
  } else {
    j["imbalanced"] = nullptr;
    j["quadrant_coverage"] = nullptr;
    j["ray_count"] = nullptr;
  }
  return j;
}

}  // namespace

Json analyze_report(const IntMatrix& input, Index search_bound,
                    const std::vector<IntVector>& extra_degrees,
                    const FieldSpec& field) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "analyze";
  j["input"] = Json{{"rows", json_matrix(input)}};
  Lattice l = Lattice::from_basis(input);
  j["lattice"] = lattice_section(l);
  j["gale"] = gale_section(l);

  Json certs;
  std::optional<CICertificate> ci;
  std::optional<NonCMCertificate> noncm;
  if (l.is_positive()) {
    ci = certify_complete_intersection(l, search_bound);
    noncm = certify_not_cm(l, extra_degrees);
    certs["complete_intersection"] = ci ? json_ci_certificate(*ci) : Json(nullptr);
    certs["not_cohen_macaulay"] =
        noncm ? json_noncm_certificate(*noncm) : Json(nullptr);
    certs["classification"] = ci      ? "complete_intersection"
                              : noncm ? "not_cohen_macaulay"
                                      : "indeterminate";
  } else {
    certs["complete_intersection"] = nullptr;
    certs["not_cohen_macaulay"] = nullptr;
    certs["classification"] = "not_positive";
  }
  j["certificates"] = std::move(certs);

  VerificationReport rep;
  if (ci)
    rep.checks.push_back({"ci_certificate", revalidate(*ci, l), "predicate recheck"});
  if (noncm) {
    bool ok = revalidate(*noncm, l);
    if (field.prime) {
      Index modular =
          betti_number(l, noncm->betti_index,
                       fiber_of(l, noncm->fiber.representative()), field);
      ok = ok && modular == noncm->betti_value;
    }
    rep.checks.push_back({"noncm_certificate", ok, "recomputed from scratch"});
  }
  j["verification"] = json_verification(rep);
  return j;
}

Json saturate_report(const IntMatrix& input) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "saturate";
  j["input"] = Json{{"rows", json_matrix(input)}};
  Lattice l = Lattice::from_basis(input);
  Lattice sat = saturate(l);
  Int idx = saturation_index(l);
  j["saturation"] = Json{{"rows", json_matrix(sat.basis())}};
  j["saturation_index"] = json_int(idx);
  j["saturated"] = idx == 1;
  j["canonical_form"] = json_matrix(sat.canonical_form());
  return j;
}

Json betti_report(const IntMatrix& input, const IntVector& degree, Index jj,
                  const FieldSpec& field) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "betti";
  j["input"] = Json{{"rows", json_matrix(input)}};
  Lattice l = Lattice::from_basis(input);
  Fiber f = fiber_of(l, degree);
  FiberMembers members = nonneg_members(f);
  j["degree"] = vector_to_string(degree);
  Json mem = Json::array();
  for (const IntVector& u : members.members) mem.push_back(vector_to_string(u));
  j["fiber_members"] = std::move(mem);
  SupportComplex d = support_complex(f);
  j["facets"] = json_facets(d);
  j["field"] = json_field(field);
  HomologyProfile profile = reduced_homology_ranks(d, field);
  j["homology"] = json_homology(profile);
  j["betti_index"] = jj;
  j["betti_number"] = profile.rank_at(static_cast<int>(jj) - 1);
  return j;
}

Json pair_record(const CertifiedPair& p, PairDirection direction, Index m,
                 Index k, const VerificationReport& verification) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "certified_pair";
  j["codim"] = m;
  j["direction"] = pair_direction_name(direction);
  j["k"] = k;
  j["lattice"] = Json{{"rows", json_matrix(p.lattice.basis())}};
  j["saturation"] = Json{{"rows", json_matrix(p.saturation.basis())}};
  j["saturation_index"] = json_int(p.index);
  j["ci_side"] = p.ci_side == CISide::lattice ? "lattice" : "saturation";
  j["ci_certificate"] = json_ci_certificate(p.ci_cert);
  j["noncm_certificate"] = json_noncm_certificate(p.noncm_cert);
  j["verification"] = json_verification(verification);
  j["verified"] = p.verified;
  return j;
}

namespace {

void render_text_rec(const Json& j, const std::string& prefix,
                     std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << prefix << key << ":\n";
        render_text_rec(value, prefix + "  ", out);
      } else {
        out << prefix << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        out << prefix << "-\n";
        render_text_rec(value, prefix + "  ", out);
      } else {
        out << prefix << "- " << value.dump() << "\n";
      }
    }
  } else {
    out << prefix << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render_text_rec(j, "", out);
  return out.str();
}

}  // namespace latticecm
