#include "metlie/json_io.hpp"

#include <fstream>
#include <sstream>

#include "metlie/error.hpp"

namespace metlie {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) out.push_back(to_json(v));
  return out;
}

Json to_json(const Signature& s) { return Json{{"plus", s.plus}, {"minus", s.minus}, {"null", s.null}}; }

Json to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& b : g.brackets()) brackets.push_back(Json{{"i", b.i}, {"j", b.j}, {"k", b.k}, {"c", to_json(b.c)}});
  return Json{{"dim", g.dim()}, {"basis_names", g.basis_names()}, {"brackets", std::move(brackets)}};
}

Json to_json(const MetricLieAlgebra& m) {
  Json out = to_json(m.algebra());
  out["gram"] = to_json(m.gram());
  return out;
}

Json to_json(const NilInvarianceReport& r) {
  Json out{{"verdict", r.certified ? "certificate" : "counterexample"},
           {"samples", r.samples},
           {"seed", r.seed},
           {"vectors_tested", r.vectors_tested}};
  out["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  return out;
}

Json to_json(const ReductionStep& s) {
  Json out;
  out["kind"] = s.kind == ReductionStep::Kind::IsotropicCentral ? "isotropic_central" : "radical_quotient";
  out["input_dim"] = s.input.dim();
  out["j"] = to_json(s.j);
  out["a"] = to_json(s.a_basis.transpose());
  out["w"] = to_json(s.w_basis.transpose());
  out["quotient"] = to_json(s.quotient);
  Json omega = Json::array();
  for (const auto& row : s.omega) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    omega.push_back(std::move(r));
  }
  out["omega"] = std::move(omega);
  Json abar = Json::array(), xi = Json::array();
  for (const auto& m : s.abar) abar.push_back(to_json(m));
  for (const auto& m : s.xi) xi.push_back(to_json(m));
  out["abar"] = std::move(abar);
  out["xi"] = std::move(xi);
  return out;
}

Json to_json(const ReductionChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  Json out;
  out["steps"] = std::move(steps);
  out["terminal"] = to_json(c.terminal);
  out["terminal_dim"] = c.terminal.dim();
  out["terminal_signature"] = to_json(signature(c.terminal));
  out["terminal_abelian"] = c.terminal_abelian;
  out["terminal_positive_definite"] = c.terminal_positive_definite;
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  schema_error("rational must be a \"p/q\" string or an integer");
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) schema_error("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) schema_error("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

LieAlgebra lie_algebra_from_json(const Json& j) {
  const std::size_t dim = index_from_json(field(j, "dim"), "dim");
  const Json& names_json = field(j, "basis_names");
  if (!names_json.is_array() || names_json.size() != dim) schema_error("basis_names must list dim names");
  std::vector<std::string> names;
  for (const auto& n : names_json) {
    if (!n.is_string()) schema_error("basis names must be strings");
    names.push_back(n.get<std::string>());
  }
  const Json& brackets_json = field(j, "brackets");
  if (!brackets_json.is_array()) schema_error("brackets must be an array");
  std::vector<BracketEntry> entries;
  for (const auto& b : brackets_json) {
    BracketEntry e;
    e.i = index_from_json(field(b, "i"), "bracket i");
    e.j = index_from_json(field(b, "j"), "bracket j");
    e.k = index_from_json(field(b, "k"), "bracket k");
    e.c = rational_from_json(field(b, "c"));
    if (e.c != 0) entries.push_back(e);
  }
  return LieAlgebra(std::move(names), entries);
}

MetricLieAlgebra metric_from_json(const Json& j) {
  LieAlgebra g = lie_algebra_from_json(j);
  Matrix gram = matrix_from_json(field(j, "gram"));
  if (gram.rows() != g.dim() || gram.cols() != g.dim()) schema_error("gram must be dim x dim");
  if (!gram.is_symmetric()) schema_error("gram must be symmetric");
  return MetricLieAlgebra(std::move(g), BilinearForm(std::move(gram)));
}

MetricLieAlgebra read_metric_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(path.string() + ": " + e.what());
  }
  return metric_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace metlie
