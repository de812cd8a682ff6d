/*******************************************************************************
 * Copyright 2026 The gcirc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 ******************************************************************************/
#include "gcirc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gcirc/circulant.hpp"
#include "gcirc/io.hpp"
#include "gcirc/modular.hpp"
#include "gcirc/properties.hpp"
#include "gcirc/repro.hpp"
#include "gcirc/search.hpp"

namespace gcirc::cli {

using io::json;

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::TooLarge:
    case Errc::SpaceTooLarge: return kResource;
    case Errc::Singular:
    case Errc::LawViolation:
    case Errc::DivisionByZero: return kCheckFailed;
    default: return kUsage;
  }
}

namespace {

struct Globals {
  std::optional<unsigned> field_m;
  std::optional<std::string> field_poly;
  std::string format = "json";
};

bool text_output(const Globals& g) { return g.format == "text"; }

FieldPtr global_field(const Globals& g) {
  if (g.field_m.has_value() != g.field_poly.has_value()) {
    throw Error(Errc::ConfigError, "--field-m and --field-poly must be given together");
  }
  if (!g.field_m) return nullptr;
  return make_field(*g.field_m, io::parse_modulus(*g.field_poly));
}

FieldPtr require_global_field(const Globals& g) {
  auto f = global_field(g);
  if (!f) throw Error(Errc::ConfigError, "no field given; pass --field-m and --field-poly");
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ConfigError, "\"" + path + "\" is not valid JSON: " + e.what());
  }
}

/// Row literals may be given as several arguments or comma separated.
std::vector<Element> parse_row(const Field& f, const std::vector<std::string>& lits) {
  std::vector<Element> row;
  for (const auto& lit : lits) row.push_back(f.parse(lit));
  if (row.empty()) throw Error(Errc::UsageError, "empty row");
  return row;
}

struct SpecInput {
  std::string spec_file;
  std::optional<std::size_t> g;
  std::vector<std::string> row;

  void attach(CLI::App* cmd) {
    cmd->add_option("--spec", spec_file, "g-circulant spec JSON file");
    cmd->add_option("-g,--g", g, "shift parameter g");
    cmd->add_option("--row", row, "first row literals (hex or polynomial in a)")->delimiter(',');
  }

  GCirculantSpec resolve(const Globals& globals) const {
    if (!spec_file.empty()) return io::spec_from_json(read_json_file(spec_file), global_field(globals));
    if (!g || row.empty()) throw Error(Errc::UsageError, "give --spec FILE or both --g and --row");
    auto f = require_global_field(globals);
    return GCirculantSpec(f, *g, parse_row(*f, row));
  }
};

void print_matrix_text(std::ostream& out, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a.field().format_hex(a(i, j));
    out << '\n';
  }
}

std::string pair_text(const Field& f, const DiagonalPair& p) {
  std::ostringstream s;
  s << "D1 = diag(";
  for (std::size_t i = 0; i < p.d1.size(); ++i) s << (i ? ", " : "") << f.format_poly(p.d1[i]);
  s << "), D2 = diag(";
  for (std::size_t i = 0; i < p.d2.size(); ++i) s << (i ? ", " : "") << f.format_poly(p.d2[i]);
  s << ")";
  s << ", k1 = " << (p.scalar1 ? f.format_poly(*p.scalar1) : "none");
  s << ", k2 = " << (p.scalar2 ? f.format_poly(*p.scalar2) : "none");
  return s.str();
}

int cmd_build(const Globals& globals, const SpecInput& in, std::ostream& out) {
  const auto spec = in.resolve(globals);
  const Matrix a = build_g_circulant(spec);
  if (text_output(globals))
    print_matrix_text(out, a);
  else
    out << io::matrix_to_json(a).dump() << '\n';
  return kOk;
}

int cmd_check(const Globals& globals, const SpecInput& in, const std::string& matrix_file,
              const std::vector<std::string>& expect, std::ostream& out, std::ostream& err) {
  const Matrix a = matrix_file.empty() ? build_g_circulant(in.resolve(globals))
                                       : io::matrix_from_json(read_json_file(matrix_file), global_field(globals));
  if (a.rows() >= kMdsSoftLimit && a.rows() < kMdsHardLimit) {
    err << "warning: MDS check at k = " << a.rows() << " enumerates a very large number of minors\n";
  }
  const PropertyReport r = check_properties(a);
  const Field& f = a.field();
  if (text_output(globals)) {
    out << "mds: " << (r.mds.mds ? "true" : "false") << " (" << r.mds.minors_checked << " minors checked)\n";
    if (r.mds.witness) {
      out << "  singular minor rows {";
      for (std::size_t i = 0; i < r.mds.witness->rows.size(); ++i) out << (i ? "," : "") << r.mds.witness->rows[i];
      out << "} cols {";
      for (std::size_t i = 0; i < r.mds.witness->cols.size(); ++i) out << (i ? "," : "") << r.mds.witness->cols[i];
      out << "}\n";
    }
    out << "involutory: " << (r.involutory ? "true" : "false") << '\n';
    out << "orthogonal: " << (r.orthogonal ? "true" : "false") << '\n';
    out << "semi_involutory: " << (r.semi_involutory ? pair_text(f, *r.semi_involutory) : "none") << '\n';
    out << "semi_orthogonal: " << (r.semi_orthogonal ? pair_text(f, *r.semi_orthogonal) : "none") << '\n';
  } else {
    out << io::report_to_json(f, r).dump() << '\n';
  }
  int code = kOk;
  for (const auto& e : expect) {
    bool ok = false;
    if (e == "mds") ok = r.mds.mds;
    else if (e == "involutory") ok = r.involutory;
    else if (e == "orthogonal") ok = r.orthogonal;
    else if (e == "semi-involutory") ok = r.semi_involutory.has_value();
    else if (e == "semi-orthogonal") ok = r.semi_orthogonal.has_value();
    else throw Error(Errc::UsageError, "unknown --expect property \"" + e + "\"");
    if (!ok) {
      err << "expected property failed: " << e << '\n';
      code = kCheckFailed;
    }
  }
  return code;
}

int cmd_square(const Globals& globals, const SpecInput& in, std::ostream& out) {
  const auto spec = in.resolve(globals);
  const auto sq = square_structured(spec);
  const Matrix a = build_g_circulant(spec);
  const bool verified = build_g_circulant(GCirculantSpec(spec.field, sq.g2, sq.row2)) == a * a;
  const Field& f = *spec.field;
  if (text_output(globals)) {
    out << "g2 = " << sq.g2 << '\n';
    for (std::size_t l = 0; l < sq.row2.size(); ++l) out << "row2[" << l << "] = " << f.format_poly(sq.row2[l]) << '\n';
    out << "verified = " << (verified ? "true" : "false") << '\n';
  } else {
    json poly = json::array();
    for (auto e : sq.row2) poly.push_back(f.format_poly(e));
    out << json{{"g2", sq.g2}, {"row2", io::elements_to_json(f, sq.row2)}, {"row2_poly", poly}, {"verified", verified}}.dump()
        << '\n';
  }
  return verified ? kOk : kCheckFailed;
}

int cmd_sqrt1(const Globals& globals, std::uint64_t k, std::ostream& out) {
  const auto s = sqrt_one_solutions(k);
  if (text_output(globals)) {
    out << "k = " << s.k << ", predicted = " << s.predicted_count << ", solutions:";
    for (auto x : s.solutions) out << ' ' << x;
    out << '\n';
  } else {
    out << io::sqrt_one_to_json(s).dump() << '\n';
  }
  return kOk;
}

struct SearchArgs {
  std::string job_file;
  std::optional<std::uint64_t> resume;
  std::string partition;
  bool no_prune = false;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  bool audit = false;
};

int cmd_search(const Globals& globals, const SearchArgs& a, std::ostream& out, std::ostream& err,
               const std::atomic<bool>* stop) {
  if (a.job_file.empty()) throw Error(Errc::UsageError, "search needs --job FILE");
  SearchJob job = io::job_from_json(read_json_file(a.job_file), global_field(globals));
  if (a.no_prune) job.prune = PruneOptions::none();
  if (a.seed) job.row_space.seed = *a.seed;
  if (a.threads) job.threads = *a.threads;
  if (a.audit) job.audit_pruned = true;
  if (!a.partition.empty()) {
    std::size_t idx = 0, n = 0;
    char slash = 0;
    std::istringstream ps(a.partition);
    if (!(ps >> idx >> slash >> n) || slash != '/' || n == 0 || idx >= n || !ps.eof()) {
      throw Error(Errc::UsageError, "--partition expects i/n with 0 <= i < n");
    }
    job = job_partition(job, n)[idx];
  }
  if (a.resume) {
    if ((job.end_position && *a.resume > *job.end_position) ||
        (job.resume_token && *a.resume < *job.resume_token)) {
      throw Error(Errc::BadResumeToken, "resume token outside the job range");
    }
    job.resume_token = *a.resume;
  }

  const SearchSummary s = run_search(
      job, [&](const SearchResult& r) { out << io::result_to_json(r).dump() << '\n'; }, stop);
  out << io::summary_to_json(s).dump() << '\n';
  if (!s.complete) err << "interrupted; resume with --resume " << s.next_position << '\n';
  return kOk;
}

int cmd_repro(const Globals& globals, const std::string& id, bool all, std::ostream& out) {
  std::vector<std::string> ids;
  if (all) {
    for (auto i : repro::example_ids()) ids.emplace_back(i);
  } else if (id.empty()) {
    throw Error(Errc::UsageError, "repro needs an example id or --all");
  } else {
    ids.push_back(id);
  }
  bool ok = true;
  for (const auto& i : ids) {
    const auto rep = repro::run(i);
    ok = ok && rep.passed();
    if (text_output(globals)) {
      out << (rep.passed() ? "PASS " : "FAIL ") << rep.id << ": " << rep.title << '\n';
      for (const auto& f : rep.facts) {
        out << "  [" << (f.pass ? "PASS" : "FAIL") << "] " << f.name;
        if (!f.detail.empty()) out << " (" << f.detail << ")";
        out << '\n';
      }
    } else {
      json facts = json::array();
      for (const auto& f : rep.facts) facts.push_back({{"fact", f.name}, {"pass", f.pass}, {"detail", f.detail}});
      out << json{{"id", rep.id}, {"title", rep.title}, {"passed", rep.passed()}, {"facts", facts}}.dump() << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
  CLI::App app{"Construct and check g-circulant matrices over GF(2^m)", "gcirc"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--field-m", globals.field_m, "extension degree m (1..16)");
  app.add_option("--field-poly", globals.field_poly, "modulus polynomial as hex, e.g. 0x165");
  app.add_option("--format", globals.format, "output format")->check(CLI::IsMember({"json", "text"}));

  SpecInput build_in, check_in, square_in;
  auto* build = app.add_subcommand("build", "build a g-circulant matrix from (g, first row)");
  build_in.attach(build);

  auto* check = app.add_subcommand("check", "report MDS / involutory / orthogonal / semi-* properties");
  check_in.attach(check);
  std::string matrix_file;
  std::vector<std::string> expect;
  check->add_option("--matrix", matrix_file, "matrix JSON file");
  check->add_option("--expect", expect, "properties that must hold (exit 1 otherwise)")->delimiter(',');

  auto* square = app.add_subcommand("square", "A^2 as a g^2-circulant, checked against direct multiplication");
  square_in.attach(square);

  auto* sqrt1 = app.add_subcommand("sqrt1", "solutions of x^2 = 1 (mod k) and the predicted count");
  std::uint64_t sqrt_k = 0;
  sqrt1->add_option("k,--k", sqrt_k, "modulus k >= 2")->required();

  auto* search = app.add_subcommand("search", "enumerate g-circulant rows for a target property");
  SearchArgs sargs;
  search->add_option("--job", sargs.job_file, "search job JSON file")->required();
  search->add_option("--resume", sargs.resume, "position to resume from");
  search->add_option("--partition", sargs.partition, "run slice i of n (0-based), as i/n");
  search->add_flag("--no-prune", sargs.no_prune, "disable every shortcut and check each row in full");
  search->add_option("--seed", sargs.seed, "seed for RANDOM row spaces");
  search->add_option("--threads", sargs.threads, "worker threads");
  search->add_flag("--audit", sargs.audit, "re-check about 1% of pruned rows in full");

  auto* repro_cmd = app.add_subcommand("repro", "reproduce a reference example");
  std::string repro_id;
  bool repro_all = false;
  repro_cmd->add_option("id", repro_id, "example id");
  repro_cmd->add_flag("--all", repro_all, "run every example");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(globals, build_in, out);
    if (*check) return cmd_check(globals, check_in, matrix_file, expect, out, err);
    if (*square) return cmd_square(globals, square_in, out);
    if (*sqrt1) return cmd_sqrt1(globals, sqrt_k, out);
    if (*search) return cmd_search(globals, sargs, out, err, stop);
    if (*repro_cmd) return cmd_repro(globals, repro_id, repro_all, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: CONFIG_ERROR: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gcirc::cli
