#include "latticecm/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "latticecm/errors.hpp"

namespace latticecm {

namespace {

Int parse_int_token(const std::string& tok) {
  if (tok.empty()) throw Error(ErrorCode::ParseError, "empty integer token");
  size_t i = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (i == tok.size())
    throw Error(ErrorCode::ParseError, "bad integer '" + tok + "'");
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw Error(ErrorCode::ParseError, "bad integer '" + tok + "'");
  return Int(tok);
}

IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty())
    throw Error(ErrorCode::ParseError, "matrix input has no rows");
  const size_t cols = rows[0].size();
  if (cols == 0) throw Error(ErrorCode::ParseError, "matrix input has empty rows");
  for (const auto& r : rows)
    if (r.size() != cols)
      throw Error(ErrorCode::ParseError, "matrix rows have inconsistent lengths");
  IntMatrix a(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) a(i, j) = rows[i][j];
  return a;
}

IntMatrix parse_json_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw Error(ErrorCode::ParseError, "JSON matrix must be {\"rows\": [[..]]}");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array())
      throw Error(ErrorCode::ParseError, "JSON matrix rows must be arrays");
    std::vector<Int> r;
    for (const auto& e : row) {
      if (e.is_number_integer())
        r.push_back(Int(static_cast<long>(e.get<std::int64_t>())));
      else if (e.is_string())
        r.push_back(parse_int_token(e.get<std::string>()));
      else
        throw Error(ErrorCode::ParseError,
                    "JSON matrix entries must be integers or integer strings");
    }
    rows.push_back(std::move(r));
  }
  return rows_to_matrix(rows);
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw Error(ErrorCode::ParseError, "empty matrix input");
  if (text[first] == '{') return parse_json_matrix(text);

  std::vector<std::vector<Int>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    // Inline input may use ';' as a row separator.
    for (char& c : line)
      if (c == ';') c = '\n';
    std::istringstream sublines(line);
    std::string subline;
    while (std::getline(sublines, subline)) {
      std::istringstream toks(subline);
      std::vector<Int> row;
      std::string tok;
      while (toks >> tok) row.push_back(parse_int_token(tok));
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows_to_matrix(rows);
}

IntVector parse_int_vector(const std::string& text) {
  std::istringstream toks(text);
  std::vector<Int> vals;
  std::string tok;
  while (toks >> tok) vals.push_back(parse_int_token(tok));
  if (vals.empty()) throw Error(ErrorCode::ParseError, "empty vector input");
  IntVector v(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) v(i) = vals[i];
  return v;
}

std::vector<std::string> matrix_plain_rows(const IntMatrix& a) {
  std::vector<std::string> rows;
  rows.reserve(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    std::string row;
    for (Index j = 0; j < a.cols(); ++j) {
      if (j > 0) row += ' ';
      row += a(i, j).get_str();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string vector_to_string(const IntVector& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += v(i).get_str();
  }
  return s;
}

}  // namespace latticecm
