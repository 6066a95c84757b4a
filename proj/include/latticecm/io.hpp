#ifndef LATTICECM_IO_HPP
#define LATTICECM_IO_HPP

#include <string>
#include <vector>

#include "latticecm/numeric.hpp"

namespace latticecm {

// Matrix text formats: plain rows (one row per line, whitespace-separated
// integers) or a JSON object {"rows": [[...], ...]} with integer or
// string entries.  Detection: the first non-space character '{' selects
// JSON.
IntMatrix parse_matrix(const std::string& text);

// "2 -1" style row; used for degree vectors and CLI flag values.
IntVector parse_int_vector(const std::string& text);

std::vector<std::string> matrix_plain_rows(const IntMatrix& a);
std::string vector_to_string(const IntVector& v);

}  // namespace latticecm

#endif  // LATTICECM_IO_HPP
