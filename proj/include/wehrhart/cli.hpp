#pragma once

// Command-line front end. `run_cli` is the whole program minus main(), so the
// test suites drive it in-process.
//
// Exit codes: 0 success or identity holds, 1 identity fails, 2 input or
// geometry error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wehrhart/ehrhart.hpp"
#include "wehrhart/error.hpp"
#include "wehrhart/io.hpp"
#include "wehrhart/lattice_count.hpp"
#include "wehrhart/polytope.hpp"
#include "wehrhart/stanley.hpp"

namespace wehrhart::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string weights_path;
  std::string weights_kind = "ic";
  std::string face;  // comma separated vertex indices
  std::string identity;
  std::string corpus_kind;
  std::size_t corpus_dim = 3;
  std::string output_path;
  std::int64_t ell_max = 5;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t budget = kDefaultCountBudget;
};

namespace detail {

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline FaceId parse_face_arg(const std::string& text) {
  FaceId id;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      id.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad face index list \"" + text + "\"");
    }
  }
  if (id.empty()) throw Error(ErrorKind::ParseError, "empty face index list");
  std::sort(id.begin(), id.end());
  return id;
}

inline std::string weight_label(const WeightSpec& spec) {
  switch (spec.kind) {
    case WeightKind::Constant: return "constant";
    case WeightKind::Ic: return "ic";
    case WeightKind::Indicator: return "indicator " + face_id_to_string(spec.face);
    case WeightKind::Subcomplex: return "subcomplex (" + std::to_string(spec.faces.size()) + " faces)";
    case WeightKind::Table: return "table (" + std::to_string(spec.entries.size()) + " entries)";
  }
  return "unknown";
}

inline WeightSpec weight_spec(const RunConfig& config) {
  if (!config.weights_path.empty()) return io::weight_spec_from_json(io::read_file(config.weights_path));
  const auto kind = io::parse_weight_kind(config.weights_kind);
  if (!kind) throw Error(ErrorKind::ParseError, "unknown weight kind " + config.weights_kind);
  WeightSpec spec;
  spec.kind = *kind;
  if (*kind == WeightKind::Indicator) {
    if (config.face.empty()) throw Error(ErrorKind::ParseError, "--weights-kind indicator needs --face");
    spec.face = parse_face_arg(config.face);
  } else if (*kind == WeightKind::Subcomplex || *kind == WeightKind::Table) {
    throw Error(ErrorKind::ParseError, config.weights_kind + " weights must come from a --weights file");
  }
  return spec;
}

inline Counter load(const RunConfig& config) {
  if (config.input_path.empty()) throw Error(ErrorKind::ParseError, "--input is required");
  if (config.ell_max < 1) throw Error(ErrorKind::InvalidArgument, "--lmax must be at least 1");
  if (config.budget < 1'000'000) throw Error(ErrorKind::InvalidArgument, "--budget must be at least 1000000");
  return Counter(face_lattice(io::polytope_from_json(io::read_file(config.input_path))), config.budget);
}

inline void emit(const io::Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

}  // namespace detail

inline int cmd_faces(const RunConfig& config, std::ostream& out) {
  const Counter counter = detail::load(config);
  const auto& lattice = counter.lattice();
  const bool simple = is_simple(lattice);
  const bool origin = contains_origin_interior(lattice.facets());
  if (config.format == OutputFormat::Json) {
    io::Json j;
    j["polytope"] = lattice.polytope().name();
    j["dim"] = lattice.dim();
    j["f_vector"] = lattice.f_vector();
    j["simple"] = simple;
    j["origin_interior"] = origin;
    j["euler_characteristic"] = lattice.euler_characteristic();
    io::Json facets = io::Json::array();
    for (const auto& h : lattice.facets()) facets.push_back({{"normal", h.normal}, {"offset", h.offset}});
    j["facets"] = facets;
    io::Json faces = io::Json::array();
    for (const auto& f : lattice.faces()) faces.push_back({{"id", f.id}, {"dim", f.dim}});
    j["faces"] = faces;
    detail::emit(j, out);
    return kExitPass;
  }
  out << "polytope: " << lattice.polytope().name() << '\n';
  out << "dim: " << lattice.dim() << '\n';
  out << "f_vector:";
  for (auto f : lattice.f_vector()) out << ' ' << f;
  out << '\n';
  out << "simple: " << detail::bool_text(simple) << '\n';
  out << "origin_interior: " << detail::bool_text(origin) << '\n';
  out << "euler_characteristic: " << lattice.euler_characteristic() << '\n';
  out << "facets:\n";
  for (const auto& h : lattice.facets()) {
    out << "  normal [";
    for (std::size_t k = 0; k < h.normal.size(); ++k) out << (k ? "," : "") << h.normal[k];
    out << "] offset " << h.offset << '\n';
  }
  out << "faces:\n";
  for (const auto& f : lattice.faces()) out << "  " << face_id_to_string(f.id) << " dim " << f.dim << '\n';
  return kExitPass;
}

inline int cmd_count(const RunConfig& config, std::ostream& out) {
  const Counter counter = detail::load(config);
  const auto& lattice = counter.lattice();
  std::vector<std::size_t> selected;
  if (config.face.empty()) {
    for (std::size_t q = 0; q < lattice.size(); ++q) selected.push_back(q);
  } else {
    selected.push_back(lattice.require(detail::parse_face_arg(config.face)));
  }
  io::Json faces = io::Json::array();
  if (config.format == OutputFormat::Text) out << "polytope: " << lattice.polytope().name() << '\n';
  for (auto q : selected) {
    const auto& f = lattice.face(q);
    io::Json rows = io::Json::array();
    if (config.format == OutputFormat::Text) out << "face " << face_id_to_string(f.id) << " dim " << f.dim << '\n';
    for (std::int64_t ell = 1; ell <= config.ell_max; ++ell) {
      const auto closed = counter.closed(q, ell);
      const auto relint = counter.relint(q, ell);
      if (config.format == OutputFormat::Text) {
        out << "  l=" << ell << ": closed " << closed << ", relint " << relint << '\n';
      }
      rows.push_back({{"l", ell}, {"closed", closed}, {"relint", relint}});
    }
    faces.push_back({{"id", f.id}, {"dim", f.dim}, {"counts", rows}});
  }
  if (config.format == OutputFormat::Json) detail::emit({{"polytope", lattice.polytope().name()}, {"faces", faces}}, out);
  return kExitPass;
}

inline int cmd_weighted(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Counter counter = detail::load(config);
  const auto& lattice = counter.lattice();
  const WeightSpec spec = detail::weight_spec(config);
  std::vector<std::string> warnings;
  const WeightFunction f = builtin_weight_function(spec, lattice, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  const auto e = weighted_ehrhart(counter, f);
  const auto constant = hodge_polynomial(lattice, f);
  bool agree = e.evaluate(0) == constant;
  io::Json values = io::Json::array();
  std::ostringstream text;
  for (std::int64_t ell = 1; ell <= config.ell_max; ++ell) {
    const auto interpolated = e.evaluate(ell);
    const auto direct = weighted_count_direct(counter, f, ell);
    agree = agree && interpolated == direct;
    values.push_back({{"l", ell}, {"E", io::to_json(interpolated)}, {"direct", io::to_json(direct)}});
    text << "  l=" << ell << ": E = " << interpolated.to_string() << " | direct = " << direct.to_string() << '\n';
  }
  if (config.format == OutputFormat::Json) {
    io::Json j;
    j["polytope"] = lattice.polytope().name();
    j["weights"] = detail::weight_label(spec);
    j["E"] = io::to_json(e);
    j["constant_term"] = io::to_json(constant);
    j["values"] = values;
    j["oracle"] = agree ? "pass" : "fail";
    detail::emit(j, out);
  } else {
    out << "polytope: " << lattice.polytope().name() << '\n';
    out << "weights: " << detail::weight_label(spec) << '\n';
    out << "E(z,y):\n";
    for (std::size_t k = 0; k < e.coefficients().size(); ++k) {
      out << "  z^" << k << ": " << e.coefficients()[k].to_string() << '\n';
    }
    out << "constant_term: " << constant.to_string() << '\n';
    out << "values:\n" << text.str();
    out << "oracle: " << (agree ? "pass" : "fail") << '\n';
  }
  return agree ? kExitPass : kExitFail;
}

inline int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto identity = parse_identity(config.identity);
  if (!identity) throw Error(ErrorKind::ParseError, "unknown check \"" + config.identity + "\"");
  const Counter counter = detail::load(config);
  const auto& lattice = counter.lattice();

  CheckReport report;
  std::optional<WeightSpec> spec;
  if (*identity == Identity::DehnSommerville) {
    report = dehn_sommerville_check(lattice);
  } else {
    spec = detail::weight_spec(config);
    std::vector<std::string> warnings;
    const WeightFunction f = builtin_weight_function(*spec, lattice, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    switch (*identity) {
      case Identity::Reciprocity: report = check_reciprocity(counter, f, config.ell_max); break;
      case Identity::Purity: report = check_purity(counter, f, config.ell_max); break;
      case Identity::ConstantTerm: report = check_constant_term(counter, f); break;
      case Identity::Oracle: report = check_oracle(counter, f, config.ell_max); break;
      case Identity::DehnSommerville: break;
    }
  }
  const char* row_label = *identity == Identity::DehnSommerville ? "row" : "l";
  const auto discrepancy = report.first_discrepancy();

  if (config.format == OutputFormat::Json) {
    io::Json j;
    j["check"] = to_string(report.identity);
    j["polytope"] = lattice.polytope().name();
    if (spec) j["weights"] = detail::weight_label(*spec);
    io::Json rows = io::Json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{row_label, r.index},
                      {"lhs", io::to_json(r.lhs)},
                      {"rhs", io::to_json(r.rhs)},
                      {"difference", io::to_json(r.difference())}});
    }
    j["rows"] = rows;
    io::Json details = io::Json::object();
    for (const auto& [name, p] : report.details) details[name] = io::to_json(p);
    j["details"] = details;
    j["verdict"] = report.passed() ? "pass" : "fail";
    j["first_discrepancy"] = discrepancy ? io::Json{{row_label, discrepancy->first},
                                                    {"difference", io::to_json(discrepancy->second)}}
                                         : io::Json(nullptr);
    detail::emit(j, out);
  } else {
    out << "check: " << to_string(report.identity) << '\n';
    out << "polytope: " << lattice.polytope().name() << '\n';
    if (spec) out << "weights: " << detail::weight_label(*spec) << '\n';
    for (const auto& r : report.rows) {
      out << "  " << row_label << '=' << r.index << ": lhs = " << r.lhs.to_string("y")
          << " | rhs = " << r.rhs.to_string("y") << " | difference = " << r.difference().to_string("y") << '\n';
    }
    for (const auto& [name, p] : report.details) out << name << ": " << p.to_string("s") << '\n';
    out << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
    if (discrepancy) {
      out << "first_discrepancy: " << row_label << '=' << discrepancy->first << ": "
          << discrepancy->second.to_string("y") << '\n';
    }
  }
  return report.passed() ? kExitPass : kExitFail;
}

inline int cmd_invariants(const RunConfig& config, std::ostream& out) {
  const Counter counter = detail::load(config);
  const auto& lattice = counter.lattice();
  const auto chi = ic_chi(lattice);
  const Rational signature = chi.evaluate(1);
  const auto poincare = ih_poincare(lattice);
  const auto h = toric_h(lattice);
  const auto g = g_tilde_table(lattice);
  const bool palindromic = chi == LaurentPoly::monomial(lattice.dim() % 2 == 0 ? 1 : -1, lattice.dim()) *
                                      substitute_reciprocal(chi);

  if (config.format == OutputFormat::Json) {
    io::Json j;
    j["polytope"] = lattice.polytope().name();
    j["dim"] = lattice.dim();
    j["simple"] = is_simple(lattice);
    j["origin_interior"] = contains_origin_interior(lattice.facets());
    j["ic_chi_y"] = io::to_json(chi);
    j["ic_chi_y_palindromic"] = palindromic;
    j["signature"] = io::to_json(LaurentPoly(signature));
    j["ih_poincare"] = io::to_json(poincare);
    j["toric_h"] = io::to_json(h);
    io::Json table = io::Json::array();
    for (std::size_t q = 0; q < lattice.size(); ++q) {
      table.push_back({{"id", lattice.face(q).id}, {"dim", lattice.face(q).dim}, {"g_tilde", io::to_json(g[q])}});
    }
    j["g_tilde"] = table;
    detail::emit(j, out);
  } else {
    out << "polytope: " << lattice.polytope().name() << '\n';
    out << "dim: " << lattice.dim() << '\n';
    out << "simple: " << detail::bool_text(is_simple(lattice)) << '\n';
    out << "origin_interior: " << detail::bool_text(contains_origin_interior(lattice.facets())) << '\n';
    out << "ic_chi_y: " << chi.to_string("y") << '\n';
    out << "ic_chi_y_palindromic: " << detail::bool_text(palindromic) << '\n';
    out << "signature: " << ::wehrhart::detail::rational_to_string(signature) << '\n';
    out << "ih_poincare: " << poincare.to_string("t") << '\n';
    out << "toric_h: " << h.to_string("s") << '\n';
    out << "g_tilde:\n";
    for (std::size_t q = 0; q < lattice.size(); ++q) {
      out << "  " << face_id_to_string(lattice.face(q).id) << " dim " << lattice.face(q).dim << ": "
          << g[q].to_string("t") << '\n';
    }
  }
  return kExitPass;
}

inline int cmd_corpus(const RunConfig& config, std::ostream& out) {
  const auto kind = parse_polytope_kind(config.corpus_kind);
  if (!kind) throw Error(ErrorKind::UnsupportedDimension, "unknown polytope family \"" + config.corpus_kind + "\"");
  const auto polytope = standard_polytope(*kind, config.corpus_dim);
  const std::string text = io::to_json(polytope).dump() + "\n";
  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output_path);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + config.output_path);
    file << text;
  }
  return kExitPass;
}

/// The full command line, argv[0] included.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Ehrhart polynomials of lattice polytopes, with exact identity checks", "wehrhart"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "polytope JSON file")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", config.budget, "cap on lattice points enumerated per count");
    sub->add_option("--lmax", config.ell_max, "largest dilation to evaluate");
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", config.weights_path, "weight function JSON file");
    sub->add_option("--weights-kind", config.weights_kind, "constant, ic or indicator (default ic)");
    sub->add_option("--face", config.face, "comma separated vertex indices of a face");
  };

  auto* faces = app.add_subcommand("faces", "list the face lattice");
  add_common(faces);
  auto* count = app.add_subcommand("count", "closed and relative-interior lattice point counts");
  add_common(count);
  count->add_option("--face", config.face, "restrict to one face (comma separated vertex indices)");
  auto* weighted = app.add_subcommand("weighted", "weighted Ehrhart polynomial E(z,y)");
  add_common(weighted);
  add_weights(weighted);
  auto* check = app.add_subcommand("check", "verify an identity; exit 0 on pass, 1 on fail");
  check->add_option("identity", config.identity, "reciprocity, purity, constant-term, dehn-sommerville or oracle")
      ->required();
  add_common(check);
  add_weights(check);
  auto* invariants = app.add_subcommand("invariants", "intersection cohomology invariants");
  add_common(invariants);
  auto* corpus = app.add_subcommand("corpus", "write a standard polytope file");
  corpus->add_option("--kind", config.corpus_kind, "simplex, cube, cross or pyramid_over_square")->required();
  corpus->add_option("--dim", config.corpus_dim, "dimension (default 3)");
  corpus->add_option("--output", config.output_path, "output path (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  try {
    if (faces->parsed()) return cmd_faces(config, out);
    if (count->parsed()) return cmd_count(config, out);
    if (weighted->parsed()) return cmd_weighted(config, out, err);
    if (check->parsed()) return cmd_check(config, out, err);
    if (invariants->parsed()) return cmd_invariants(config, out);
    if (corpus->parsed()) return cmd_corpus(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace wehrhart::cli
