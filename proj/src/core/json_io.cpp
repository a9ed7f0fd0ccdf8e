#include "json_io.hpp"

#include <set>

namespace extalg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_object_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  for (const char* key : keys) {
    if (!j.contains(key)) throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
  }
  if (j.size() != keys.size()) {
    throw ParseError(std::string(what) + ": unexpected extra keys");
  }
}

int get_int(const json& j, const char* key, const char* what, int lo, int hi) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string(what) + ": \"" + key + "\" must be an integer");
  }
  long long raw = v.get<long long>();
  if (raw < lo || raw > hi) {
    throw ParseError(std::string(what) + ": \"" + key + "\" out of range");
  }
  return static_cast<int>(raw);
}

Rational get_rational(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + ": rational must be a string");
  auto parsed = Rational::parse(v.get<std::string>());
  if (!parsed) {
    throw ParseError(std::string(what) + ": bad rational \"" + v.get<std::string>() + "\"");
  }
  return *parsed;
}

std::vector<int> get_index_word(const json& v, int ambient, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": \"index\" must be an array");
  std::vector<int> word;
  word.reserve(v.size());
  for (const auto& entry : v) {
    if (!entry.is_number_integer()) {
      throw ParseError(std::string(what) + ": index entries must be integers");
    }
    long long raw = entry.get<long long>();
    if (raw < 1 || raw > ambient) {
      throw ParseError(std::string(what) + ": index entry out of range");
    }
    word.push_back(static_cast<int>(raw));
  }
  for (size_t k = 1; k < word.size(); ++k) {
    if (word[k - 1] >= word[k]) {
      throw ParseError(std::string(what) + ": index not strictly increasing");
    }
  }
  return word;
}

ordered_json index_to_json(const Combination& c) {
  ordered_json arr = ordered_json::array();
  for (int v : c.word) arr.push_back(v);
  return arr;
}

}  // namespace

Matrix matrix_from_json(const json& j) {
  require_object_keys(j, {"rows", "cols", "entries"}, "matrix");
  int rows = get_int(j, "rows", "matrix", 0, 1 << 20);
  int cols = get_int(j, "cols", "matrix", 0, 1 << 20);
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(rows)) {
    throw ParseError("matrix: \"entries\" must be an array of length rows");
  }
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != static_cast<size_t>(cols)) {
      throw ParseError("matrix: each row must be an array of length cols");
    }
    for (const auto& cell : row) flat.push_back(get_rational(cell, "matrix"));
  }
  return Matrix(rows, cols, std::move(flat));
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Tensor tensor_from_json(const json& j) {
  require_object_keys(j, {"dim", "order", "components"}, "tensor");
  int dim = get_int(j, "dim", "tensor", 1, 1 << 20);
  int order = get_int(j, "order", "tensor", 0, 64);
  const auto& comps = j.at("components");
  if (!comps.is_array()) throw ParseError("tensor: \"components\" must be an array");
  std::vector<Rational> flat;
  flat.reserve(comps.size());
  for (const auto& cell : comps) flat.push_back(get_rational(cell, "tensor"));
  try {
    return Tensor(dim, order, std::move(flat));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("tensor: ") + e.what());
  }
}

ordered_json tensor_to_json(const Tensor& t) {
  ordered_json j;
  j["dim"] = t.ambient();
  j["order"] = t.order();
  ordered_json comps = ordered_json::array();
  for (const auto& c : t.components()) comps.push_back(c.str());
  j["components"] = std::move(comps);
  return j;
}

GradedElement graded_from_json(const json& j) {
  require_object_keys(j, {"dim", "terms"}, "multivector");
  int dim = get_int(j, "dim", "multivector", 0, 1 << 20);
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("multivector: \"terms\" must be an array");
  GradedElement out(dim);
  std::set<std::vector<int>> seen;
  for (const auto& term : terms) {
    require_object_keys(term, {"index", "coeff"}, "multivector term");
    std::vector<int> word = get_index_word(term.at("index"), dim, "multivector");
    if (!seen.insert(word).second) {
      throw ParseError("multivector: duplicate index");
    }
    Rational c = get_rational(term.at("coeff"), "multivector");
    if (c.is_zero()) continue;
    out.add_part(Multivector::basis(dim, Combination(dim, std::move(word)), c));
  }
  return out;
}

ordered_json graded_to_json(const GradedElement& v) {
  ordered_json j;
  j["dim"] = v.ambient();
  ordered_json terms = ordered_json::array();
  for (const auto& [grade, mv] : v.parts()) {
    for (const auto& [index, c] : mv.terms()) {
      ordered_json term;
      term["index"] = index_to_json(index);
      term["coeff"] = c.str();
      terms.push_back(std::move(term));
    }
  }
  j["terms"] = std::move(terms);
  return j;
}

PolyForm form_from_json(const json& j) {
  require_object_keys(j, {"vars", "terms"}, "form");
  int vars = get_int(j, "vars", "form", 1, 1 << 10);
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("form: \"terms\" must be an array");
  PolyForm out(vars);
  std::set<std::vector<int>> seen;
  for (const auto& term : terms) {
    require_object_keys(term, {"index", "poly"}, "form term");
    std::vector<int> word = get_index_word(term.at("index"), vars, "form");
    if (!seen.insert(word).second) throw ParseError("form: duplicate index");
    const auto& poly = term.at("poly");
    if (!poly.is_array()) throw ParseError("form: \"poly\" must be an array");
    Polynomial f(vars);
    std::set<std::vector<int>> seen_exps;
    for (const auto& mono : poly) {
      require_object_keys(mono, {"exps", "coeff"}, "form monomial");
      const auto& exps_json = mono.at("exps");
      if (!exps_json.is_array() || exps_json.size() != static_cast<size_t>(vars)) {
        throw ParseError("form: \"exps\" must be an array of length vars");
      }
      std::vector<int> exps;
      exps.reserve(static_cast<size_t>(vars));
      for (const auto& e : exps_json) {
        if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > (1 << 20)) {
          throw ParseError("form: exponent out of range");
        }
        exps.push_back(static_cast<int>(e.get<long long>()));
      }
      if (!seen_exps.insert(exps).second) throw ParseError("form: duplicate exponent word");
      f.add_term(std::move(exps), get_rational(mono.at("coeff"), "form"));
    }
    out.add_term(Combination(vars, std::move(word)), f);
  }
  return out;
}

ordered_json form_to_json(const PolyForm& f) {
  ordered_json j;
  j["vars"] = f.nvars();
  ordered_json terms = ordered_json::array();
  for (const auto& [index, poly] : f.terms()) {
    ordered_json term;
    term["index"] = index_to_json(index);
    ordered_json monos = ordered_json::array();
    for (const auto& [exps, c] : poly.terms()) {
      ordered_json mono;
      ordered_json earr = ordered_json::array();
      for (int e : exps) earr.push_back(e);
      mono["exps"] = std::move(earr);
      mono["coeff"] = c.str();
      monos.push_back(std::move(mono));
    }
    term["poly"] = std::move(monos);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

nlohmann::json parse_json_text(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(); }

}  // namespace extalg
