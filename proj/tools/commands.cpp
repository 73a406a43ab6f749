#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metlie/catalog.hpp"
#include "metlie/error.hpp"
#include "metlie/json_io.hpp"
#include "metlie/reduction.hpp"
#include "metlie/structure.hpp"
#include "metlie/verify.hpp"

namespace metlie::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out_path;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidBracket:
    case ErrorCode::NonSymmetric:
    case ErrorCode::NonSquare:
    case ErrorCode::DimensionMismatch: return Parse;
    case ErrorCode::JacobiViolation: return Jacobi;
    case ErrorCode::NotNilInvariant: return NotNilInvariant;
    case ErrorCode::NonSolvable: return NonSolvable;
    case ErrorCode::InvalidParams: return InvalidParams;
    default: return Internal;
  }
}

void diagnose(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  Json d;
  d["error"] = kind;
  d["exit_code"] = code;
  d["message"] = message;
  err << d.dump() << '\n';
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidParams, "cannot write " + path.string());
  f << text;
}

// JSON to --out, and to stdout when --json is set; otherwise stdout gets the
// human rendering.
void emit(const Options& opt, const Json& report, const std::string& human, std::ostream& out) {
  const std::string text = dump(report);
  if (!opt.out_path.empty()) write_file(opt.out_path, text);
  out << (opt.json ? text : human);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

std::string subspace_text(const Subspace& s) {
  std::string t = "dim " + std::to_string(s.dim());
  for (const auto& v : s.vectors()) t += " " + vector_text(v);
  return t;
}

Json series_dims(const std::vector<Subspace>& series) {
  Json dims = Json::array();
  for (const auto& s : series) dims.push_back(s.dim());
  return dims;
}

std::string dims_text(const Json& dims) {
  std::string t;
  for (const auto& d : dims) t += (t.empty() ? "" : " ") + std::to_string(d.get<std::size_t>());
  return t;
}

int cmd_analyze(const std::string& path, const Options& opt, std::ostream& out) {
  const MetricLieAlgebra m = read_metric_file(path);
  const LieAlgebra& g = m.algebra();
  const auto& names = g.basis_names();
  const bool solvable = is_solvable(g);

  Json r;
  r["dim"] = m.dim();
  r["basis_names"] = names;
  r["solvable"] = solvable;
  r["nilpotent"] = is_nilpotent(g);
  r["derived_series_dims"] = series_dims(derived_series(g));
  r["lower_central_series_dims"] = series_dims(lower_central_series(g));
  r["center"] = to_json(center(g));
  r["nilradical"] = solvable ? to_json(nilradical(g)) : Json(nullptr);
  r["metric_radical"] = to_json(metric_radical(m));
  r["j0"] = solvable ? to_json(j0(m)) : Json(nullptr);
  r["reduced_core"] = to_json(reduced_core(m));
  const auto sig = signature(m);
  r["signature"] = to_json(sig);
  r["witt_index"] = witt_index(m);
  r["is_invariant"] = is_invariant(m);
  const auto witness = invariance_witness(m);
  if (witness)
    r["invariance_witness"] = Json{{"x", names[witness->x]},
                                   {"y", names[witness->y]},
                                   {"z", names[witness->z]},
                                   {"lhs", to_json(witness->lhs)},
                                   {"rhs", to_json(witness->rhs)}};
  else
    r["invariance_witness"] = nullptr;
  const auto report = nil_invariance_check(m, opt.samples, opt.seed);
  r["nil_invariance"] = to_json(report);

  std::ostringstream h;
  h << "dim: " << m.dim() << "\n";
  h << "solvable: " << yes_no(solvable) << "\n";
  h << "nilpotent: " << yes_no(r["nilpotent"].get<bool>()) << "\n";
  h << "derived series dims: " << dims_text(r["derived_series_dims"]) << "\n";
  h << "lower central series dims: " << dims_text(r["lower_central_series_dims"]) << "\n";
  h << "center: " << subspace_text(center(g)) << "\n";
  if (solvable) h << "nilradical: " << subspace_text(nilradical(g)) << "\n";
  h << "metric radical: " << subspace_text(metric_radical(m)) << "\n";
  if (solvable) h << "j0: " << subspace_text(j0(m)) << "\n";
  h << "reduced core: " << subspace_text(reduced_core(m)) << "\n";
  h << "signature: (" << sig.plus << "," << sig.minus << "," << sig.null << ")\n";
  h << "witt index: " << witt_index(m) << "\n";
  h << "invariant: " << yes_no(!witness);
  if (witness)
    h << " (<[" << names[witness->x] << "," << names[witness->y] << "]," << names[witness->z]
      << "> = " << to_string(witness->lhs) << ", -<" << names[witness->y] << ",[" << names[witness->x] << ","
      << names[witness->z] << "]> = " << to_string(witness->rhs) << ")";
  h << "\n";
  h << "nil-invariance (samples " << opt.samples << ", seed " << opt.seed
    << "): " << (report.certified ? "certificate" : "counterexample " + vector_text(*report.counterexample))
    << "\n";
  emit(opt, r, h.str(), out);
  return Ok;
}

int cmd_reduce(const std::string& path, const Options& opt, std::ostream& out) {
  const MetricLieAlgebra m = read_metric_file(path);
  const ReductionChain chain = complete_reduction(m);
  const auto sig = signature(chain.terminal);
  std::ostringstream h;
  h << "steps: " << chain.steps.size() << "\n";
  h << "terminal: dim " << chain.terminal.dim() << ", abelian " << yes_no(chain.terminal_abelian)
    << ", positive definite " << yes_no(chain.terminal_positive_definite) << ", signature (" << sig.plus << ","
    << sig.minus << "," << sig.null << ")\n";
  emit(opt, to_json(chain), h.str(), out);
  return Ok;
}

std::vector<std::pair<std::string, fs::path>> corpus_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::ParseError, "corpus directory not found: " + dir.string());
  std::vector<std::pair<std::string, fs::path>> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.emplace_back(fs::relative(entry.path(), dir).generic_string(), entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

int cmd_verify(const std::string& path, const std::string& corpus, const Options& opt, std::ostream& out) {
  std::vector<std::pair<std::string, fs::path>> files;
  if (!corpus.empty()) {
    files = corpus_files(corpus);
  } else if (!path.empty()) {
    files.emplace_back(path, path);
  } else {
    throw Error(ErrorCode::InvalidParams, "verify: give a file or --corpus DIR");
  }

  Json instances = Json::array();
  std::ostringstream h;
  bool pass = true;
  std::size_t failed_instances = 0;
  for (const auto& [name, file] : files) {
    std::vector<CheckResult> checks;
    try {
      checks = verify_instance(read_metric_file(file), opt.samples, opt.seed);
    } catch (Error& e) {
      throw Error(e.code(), name + ": " + e.what());
    }
    const bool ok = all_passed(checks);
    pass = pass && ok;
    failed_instances += ok ? 0 : 1;
    Json list = Json::array();
    std::size_t passed = 0, skipped = 0;
    for (const auto& c : checks) {
      list.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
      passed += c.status == CheckResult::Status::Pass;
      skipped += c.status == CheckResult::Status::Skip;
    }
    instances.push_back(Json{{"path", name}, {"pass", ok}, {"checks", std::move(list)}});
    h << (ok ? "PASS " : "FAIL ") << name << " (" << passed << " passed, " << skipped << " skipped)\n";
    for (const auto& c : checks)
      if (c.status == CheckResult::Status::Fail)
        h << "  fail " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  h << files.size() - failed_instances << "/" << files.size() << " instances passed\n";
  Json report;
  report["samples"] = opt.samples;
  report["seed"] = opt.seed;
  report["pass"] = pass;
  report["instances"] = std::move(instances);
  emit(opt, report, h.str(), out);
  return pass ? Ok : CheckFailed;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params, const Options& opt,
                 std::ostream& out) {
  FamilySpec spec{parse_family(family), params, opt.seed};
  Json j = to_json(generate(spec));
  j["metadata"] = Json{{"family", family}, {"params", params}, {"seed", opt.seed}};
  const std::string text = dump(j);
  if (opt.out_path.empty())
    out << text;
  else
    write_file(opt.out_path, text);
  return Ok;
}

void add_common(CLI::App* sub, Options& opt, bool sampling) {
  if (sampling) {
    sub->add_option("--samples", opt.samples, "random vectors for the nil-invariance sampler")->capture_default_str();
    sub->add_option("--seed", opt.seed, "seed for the nil-invariance sampler")->capture_default_str();
  }
  sub->add_flag("--json", opt.json, "print the JSON report instead of the summary");
  sub->add_option("--out", opt.out_path, "also write the JSON report to this file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on metric Lie algebras over the rationals", "metlie"};
  app.require_subcommand(1);
  Options opt;
  std::string path, corpus, family;
  std::vector<std::string> params;

  auto* analyze = app.add_subcommand("analyze", "structure and metric report for one instance");
  analyze->add_option("path", path, "instance file")->required();
  add_common(analyze, opt, true);

  auto* reduce = app.add_subcommand("reduce", "complete reduction chain of an invariant instance");
  reduce->add_option("path", path, "instance file")->required();
  add_common(reduce, opt, false);

  auto* verify = app.add_subcommand("verify", "run the invariant suite on a file or a corpus");
  verify->add_option("path", path, "instance file");
  verify->add_option("--corpus", corpus, "directory searched recursively for *.json");
  add_common(verify, opt, true);

  auto* gen = app.add_subcommand("generate", "write a catalog instance");
  gen->add_option("family", family, "abelian | heisenberg | oscillator | r2 | double_extension_chain | random_solvable")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", opt.seed, "generator seed")->capture_default_str();
  gen->add_option("--out", opt.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    diagnose(err, Parse, "UsageError", e.what());
    return Parse;
  }

  try {
    if (*analyze) return cmd_analyze(path, opt, out);
    if (*reduce) return cmd_reduce(path, opt, out);
    if (*verify) return cmd_verify(path, corpus, opt, out);
    return cmd_generate(family, params, opt, out);
  } catch (const Error& e) {
    const int code = exit_code(e.code());
    diagnose(err, code, std::string(to_string(e.code())), e.what());
    return code;
  } catch (const std::exception& e) {
    diagnose(err, Internal, "Internal", e.what());
    return Internal;
  }
}

}  // namespace metlie::cli
