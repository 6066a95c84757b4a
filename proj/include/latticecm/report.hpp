#ifndef LATTICECM_REPORT_HPP
#define LATTICECM_REPORT_HPP

#include <nlohmann/json.hpp>

#include "latticecm/certify.hpp"
#include "latticecm/generate.hpp"

namespace latticecm {

// All emitted JSON carries this schema tag; field order is fixed by
// construction order (ordered_json) so identical inputs produce
// byte-identical documents.
inline constexpr const char* kSchema = "lattice-cm/1";

using Json = nlohmann::ordered_json;

Json json_int(const Int& v);  // number when it fits in int64, else string
Json json_matrix(const IntMatrix& a);
Json json_ci_certificate(const CICertificate& c);
Json json_noncm_certificate(const NonCMCertificate& c);
Json json_verification(const VerificationReport& r);

// Full analysis of one input matrix: lattice statistics, Gale
// classification, certificate attempts, and a self-check section that
// revalidates whatever certificates were found.
Json analyze_report(const IntMatrix& input, Index search_bound,
                    const std::vector<IntVector>& extra_degrees,
                    const FieldSpec& field);

Json saturate_report(const IntMatrix& input);

Json betti_report(const IntMatrix& input, const IntVector& degree, Index j,
                  const FieldSpec& field);

Json pair_record(const CertifiedPair& p, PairDirection direction, Index m,
                 Index k, const VerificationReport& verification);

// Compact fixed-layout text rendering of any of the documents above.
std::string render_text(const Json& j);

}  // namespace latticecm

#endif  // LATTICECM_REPORT_HPP
