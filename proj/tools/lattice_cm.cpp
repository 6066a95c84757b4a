// lattice-cm: analyze integer lattices and their lattice ideals, and
// generate verified pairs (L, L^sat) where one lattice ideal is a
// complete intersection and the other is not Cohen-Macaulay.
//
// Exit codes: 0 success, 2 usage/parse error, 3 input invariant
// violation, 4 verification failure, 5 refused computation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latticecm/errors.hpp"
#include "latticecm/generate.hpp"
#include "latticecm/io.hpp"
#include "latticecm/report.hpp"
#include "latticecm/svg.hpp"

namespace {

using namespace latticecm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitVerification = 4;
constexpr int kExitRefused = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::WrongCodim:
    case ErrorCode::InvalidField:
      return kExitUsage;
    case ErrorCode::NotFullRank:
    case ErrorCode::ZeroRow:
    case ErrorCode::AmbientTooSmall:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::ZeroPoint:
    case ErrorCode::QuadrantNotCovered:
    case ErrorCode::NotImbalanced:
    case ErrorCode::TooFewRays:
      return kExitInvariant;
    case ErrorCode::VerificationFailed:
    case ErrorCode::DegenerateTransform:
      return kExitVerification;
    case ErrorCode::NotPositive:
      return kExitRefused;
    default:
      return 1;
  }
}

struct CommonOptions {
  std::string input_path;
  std::string matrix_text;
  std::string format = "json";
  std::string field = "q";
  std::string out_path;
};

void add_matrix_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("input", opt.input_path,
                  "matrix file (plain rows or JSON), or '-' for stdin");
  cmd->add_option("--matrix", opt.matrix_text,
                  "inline matrix, rows separated by ';'");
}

void add_output_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opt.out_path, "write output to a file");
}

IntMatrix load_matrix(const CommonOptions& opt) {
  if (!opt.matrix_text.empty()) return parse_matrix(opt.matrix_text);
  if (opt.input_path.empty())
    throw Error(ErrorCode::ParseError, "no matrix given (positional file or --matrix)");
  if (opt.input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_matrix(buf.str());
  }
  std::ifstream in(opt.input_path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open '" + opt.input_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return FieldSpec::rationals();
  try {
    size_t pos = 0;
    unsigned long long p = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return FieldSpec::gf(p);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidField, "field must be 'q' or a prime");
  }
}

void emit(const CommonOptions& opt, const Json& doc, long timing_ms) {
  Json out = doc;
  out["timing_ms"] = timing_ms;  // not covered by the determinism contract
  std::string text =
      opt.format == "text" ? render_text(out) : out.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f)
      throw Error(ErrorCode::ParseError, "cannot write '" + opt.out_path + "'");
    f << text;
  }
}

long elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of lattice ideals and their saturations"};
  app.require_subcommand(1);

  CommonOptions opt;
  Index search_bound = 5;
  std::vector<std::string> extra_degree_texts;
  std::string degree_text;
  Index betti_index = 0;
  Index codim = 2;
  Index count = 1;
  Index start_k = 1;
  std::string direction_text = "ci_lattice";
  bool skip_verify = false;

  CLI::App* analyze = app.add_subcommand("analyze", "full lattice/Gale/certificate report");
  add_matrix_options(analyze, opt);
  add_output_options(analyze, opt);
  analyze->add_option("--field", opt.field, "homology field: q or a prime");
  analyze->add_option("--search-bound", search_bound,
                      "entry bound for the unimodular witness search");
  analyze->add_option("--extra-degree", extra_degree_texts,
                      "additional degree vectors for the non-CM search");

  CLI::App* saturate_cmd = app.add_subcommand("saturate", "saturation basis and index");
  add_matrix_options(saturate_cmd, opt);
  add_output_options(saturate_cmd, opt);

  CLI::App* betti = app.add_subcommand("betti", "fiber members, support complex, Betti number");
  add_matrix_options(betti, opt);
  add_output_options(betti, opt);
  betti->add_option("--degree", degree_text, "degree vector, e.g. \"2 6 5 0\"")
      ->required();
  betti->add_option("--index", betti_index, "Betti index j")->required();
  betti->add_option("--field", opt.field, "homology field: q or a prime");

  CLI::App* generate = app.add_subcommand("generate", "verified CI / non-CM pairs");
  add_output_options(generate, opt);
  generate->add_option("--codim", codim, "codimension m >= 2")
      ->required()
      ->check(CLI::Range(static_cast<Index>(2), static_cast<Index>(64)));
  generate->add_option("--direction", direction_text, "which side is the CI")
      ->check(CLI::IsMember({"ci_lattice", "ci_saturation"}));
  generate->add_option("--count", count, "number of pairs");
  generate->add_option("--start-k", start_k, "first family index");
  generate->add_flag("--skip-verify", skip_verify, "emit pairs without verification");

  CLI::App* certify_cmd = app.add_subcommand("certify", "certificates only");
  add_matrix_options(certify_cmd, opt);
  add_output_options(certify_cmd, opt);
  certify_cmd->add_option("--field", opt.field, "homology field: q or a prime");
  certify_cmd->add_option("--search-bound", search_bound,
                          "entry bound for the unimodular witness search");
  certify_cmd->add_option("--extra-degree", extra_degree_texts,
                          "additional degree vectors for the non-CM search");

  CLI::App* svg = app.add_subcommand("svg", "SVG drawing of the Gale diagram");
  add_matrix_options(svg, opt);
  svg->add_option("--out", opt.out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    if (analyze->parsed() || certify_cmd->parsed()) {
      IntMatrix m = load_matrix(opt);
      FieldSpec field = parse_field(opt.field);
      std::vector<IntVector> extras;
      for (const std::string& t : extra_degree_texts)
        extras.push_back(parse_int_vector(t));
      Json doc = analyze_report(m, search_bound, extras, field);
      if (certify_cmd->parsed()) {
        Json sub;
        sub["schema"] = kSchema;
        sub["command"] = "certify";
        sub["input"] = doc["input"];
        sub["certificates"] = doc["certificates"];
        sub["verification"] = doc["verification"];
        doc = std::move(sub);
      }
      emit(opt, doc, elapsed_ms(start));
      return kExitOk;
    }

    if (saturate_cmd->parsed()) {
      IntMatrix m = load_matrix(opt);
      emit(opt, saturate_report(m), elapsed_ms(start));
      return kExitOk;
    }

    if (betti->parsed()) {
      IntMatrix m = load_matrix(opt);
      FieldSpec field = parse_field(opt.field);
      IntVector degree = parse_int_vector(degree_text);
      emit(opt, betti_report(m, degree, betti_index, field), elapsed_ms(start));
      return kExitOk;
    }

    if (generate->parsed()) {
      PairDirection dir = direction_text == "ci_saturation"
                              ? PairDirection::ci_saturation
                              : PairDirection::ci_lattice;
      std::ostringstream records;
      bool all_ok = true;
      for (Index i = 0; i < count; ++i) {
        Index k = start_k + i;
        CertifiedPair pair = generate_pair(codim, dir, k);
        VerificationReport rep;
        if (!skip_verify) {
          rep = verify_pair(pair);
          pair.verified = rep.all_passed();
          all_ok = all_ok && pair.verified;
        }
        Json rec = pair_record(pair, dir, codim, k, rep);
        records << rec.dump() << "\n";  // one JSON record per line
      }
      if (opt.out_path.empty()) {
        std::cout << records.str();
      } else {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f)
          throw Error(ErrorCode::ParseError, "cannot write '" + opt.out_path + "'");
        f << records.str();
      }
      if (!all_ok) {
        std::cerr << "lattice-cm: verification failed for at least one pair\n";
        return kExitVerification;
      }
      return kExitOk;
    }

    if (svg->parsed()) {
      IntMatrix m = load_matrix(opt);
      std::string image = render_gale_svg(m);
      if (opt.out_path.empty()) {
        std::cout << image;
      } else {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f)
          throw Error(ErrorCode::ParseError, "cannot write '" + opt.out_path + "'");
        f << image;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "lattice-cm: " << error_code_name(e.code()) << ": " << e.what()
              << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "lattice-cm: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
