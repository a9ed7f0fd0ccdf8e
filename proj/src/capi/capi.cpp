// C bindings over the extalg core. Exceptions are mapped to status codes
// and a thread-local message retrievable via extalg_last_error().

#include "extalg.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "index_words.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "multivector.hpp"
#include "polyform.hpp"
#include "rational.hpp"
#include "selfcheck.hpp"
#include "tensor.hpp"

struct extalg_matrix {
  extalg::Matrix value;
};
struct extalg_mvec {
  extalg::GradedElement value;
};
struct extalg_tensor {
  extalg::Tensor value;
};
struct extalg_form {
  extalg::PolyForm value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

extalg_status fail(extalg_status code, const char* message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
extalg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return EXTALG_OK;
  } catch (const extalg::ParseError& e) {
    g_last_error = e.what();
    return EXTALG_ERR_PARSE;
  } catch (const extalg::DimensionError& e) {
    g_last_error = e.what();
    return EXTALG_ERR_SHAPE;
  } catch (const extalg::RefusedError& e) {
    g_last_error = e.what();
    return EXTALG_ERR_REFUSED;
  } catch (const extalg::DomainError& e) {
    g_last_error = e.what();
    return EXTALG_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EXTALG_ERR_INTERNAL;
  }
}

extalg::Rational parse_rational_or_throw(const char* text) {
  auto r = extalg::Rational::parse(text);
  if (!r) throw extalg::ParseError(std::string("bad rational \"") + text + "\"");
  return *r;
}

std::vector<int> copy_word(const int* data, int len) {
  if (len < 0) throw extalg::DomainError("negative length");
  if (len > 0 && data == nullptr) throw extalg::DomainError("null word");
  return std::vector<int>(data, data + len);
}

// The primal side of pair/contract must be homogeneous for contract.
const extalg::Multivector single_grade(const extalg::GradedElement& v, const char* what) {
  if (v.parts().size() > 1) {
    throw extalg::DimensionError(std::string(what) + ": element mixes grades");
  }
  if (v.parts().empty()) return extalg::Multivector(v.ambient(), 0);
  return v.parts().begin()->second;
}

}  // namespace

extern "C" {

const char* extalg_version(void) { return "0.1.0"; }

const char* extalg_last_error(void) { return g_last_error.c_str(); }

void extalg_string_free(char* s) { std::free(s); }

/* --- rationals --- */

extalg_status extalg_rational_add(const char* a, const char* b, char** out) {
  if (!a || !b || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = dup_string((parse_rational_or_throw(a) + parse_rational_or_throw(b)).str());
  });
}

extalg_status extalg_rational_mul(const char* a, const char* b, char** out) {
  if (!a || !b || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = dup_string((parse_rational_or_throw(a) * parse_rational_or_throw(b)).str());
  });
}

extalg_status extalg_rational_neg(const char* a, char** out) {
  if (!a || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string((-parse_rational_or_throw(a)).str()); });
}

extalg_status extalg_rational_inv(const char* a, char** out) {
  if (!a || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(parse_rational_or_throw(a).inverse().str()); });
}

extalg_status extalg_inverse_factorial(int m, char** out) {
  if (!out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(extalg::inverse_factorial(m).str()); });
}

/* --- combinatorics --- */

extalg_status extalg_enum_listing(const char* kind, int n, int m, char** out) {
  if (!kind || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    std::string text;
    std::uint64_t count = 0;
    auto append = [&](const std::vector<int>& word) {
      for (size_t k = 0; k < word.size(); ++k) {
        if (k > 0) text.push_back(',');
        text += std::to_string(word[k]);
      }
      text.push_back('\n');
      ++count;
    };
    std::string which(kind);
    if (which == "comb") {
      for (const auto& w : extalg::CombinationRange(n, m)) append(w);
    } else if (which == "inj") {
      for (const auto& w : extalg::InjectionRange(n, m)) append(w);
    } else if (which == "place") {
      for (const auto& w : extalg::PlacementRange(n, m)) append(w);
    } else {
      throw extalg::DomainError("enum: kind must be comb, inj or place");
    }
    text += "count=" + std::to_string(count) + "\n";
    *out = dup_string(text);
  });
}

extalg_status extalg_parity(const int* images, int len, int* out_sign) {
  if (!out_sign) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Permutation p(copy_word(images, len));
    *out_sign = extalg::parity(p);
  });
}

extalg_status extalg_rank_combination(int n, const int* word, int len, uint64_t* out_rank) {
  if (!out_rank) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Combination c(n, copy_word(word, len));
    *out_rank = extalg::rank_combination(c);
  });
}

extalg_status extalg_unrank_combination(int n, int m, uint64_t rank, char** out) {
  if (!out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Combination c = extalg::unrank_combination(n, m, rank);
    std::string text;
    for (size_t k = 0; k < c.word.size(); ++k) {
      if (k > 0) text.push_back(',');
      text += std::to_string(c.word[k]);
    }
    *out = dup_string(text);
  });
}

/* --- matrices --- */

extalg_status extalg_matrix_from_json(const char* json, extalg_matrix** out) {
  if (!json || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    auto parsed = extalg::matrix_from_json(extalg::parse_json_text(json));
    *out = new extalg_matrix{std::move(parsed)};
  });
}

extalg_status extalg_matrix_to_json(const extalg_matrix* m, char** out) {
  if (!m || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(extalg::dump_json(extalg::matrix_to_json(m->value))); });
}

void extalg_matrix_free(extalg_matrix* m) { delete m; }

extalg_status extalg_matrix_mul(const extalg_matrix* a, const extalg_matrix* b,
                                extalg_matrix** out) {
  if (!a || !b || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_matrix{a->value * b->value}; });
}

extalg_status extalg_det_leibniz(const extalg_matrix* a, int force, char** out) {
  if (!a || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(extalg::det_leibniz(a->value, force != 0).str()); });
}

extalg_status extalg_det_laplace(const extalg_matrix* a, const int* rowset, int rowset_len,
                                 char** out) {
  if (!a || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Combination rows(a->value.rows(), copy_word(rowset, rowset_len));
    *out = dup_string(extalg::det_laplace(a->value, rows).str());
  });
}

extalg_status extalg_cauchy_binet(const extalg_matrix* a, const extalg_matrix* b, char** out) {
  if (!a || !b || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(extalg::cauchy_binet(a->value, b->value).str()); });
}

extalg_status extalg_minor(const extalg_matrix* a, const int* rows, int nrows, const int* cols,
                           int ncols, char** out) {
  if (!a || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Combination r(a->value.rows(), copy_word(rows, nrows));
    extalg::Combination c(a->value.cols(), copy_word(cols, ncols));
    *out = dup_string(extalg::minor_det(a->value, r, c).str());
  });
}

extalg_status extalg_compound(const extalg_matrix* a, int m, extalg_matrix** out) {
  if (!a || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_matrix{extalg::exterior_power_map(a->value, m)}; });
}

/* --- multivectors --- */

extalg_status extalg_mvec_from_json(const char* json, extalg_mvec** out) {
  if (!json || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    auto parsed = extalg::graded_from_json(extalg::parse_json_text(json));
    *out = new extalg_mvec{std::move(parsed)};
  });
}

extalg_status extalg_mvec_to_json(const extalg_mvec* v, char** out) {
  if (!v || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(extalg::dump_json(extalg::graded_to_json(v->value))); });
}

void extalg_mvec_free(extalg_mvec* v) { delete v; }

extalg_status extalg_wedge(const extalg_mvec* u, const extalg_mvec* v, extalg_mvec** out) {
  if (!u || !v || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_mvec{extalg::wedge(u->value, v->value)}; });
}

extalg_status extalg_apply_map(const extalg_matrix* a, const extalg_mvec* v, extalg_mvec** out) {
  if (!a || !v || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_mvec{extalg::apply_map(a->value, v->value)}; });
}

extalg_status extalg_pair(const extalg_mvec* dual, const extalg_mvec* primal, char** out) {
  if (!dual || !primal || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Rational value =
        extalg::pair_chains(extalg::Dual<extalg::GradedElement>{dual->value}, primal->value);
    *out = dup_string(value.str());
  });
}

extalg_status extalg_contract(const extalg_mvec* dual, const extalg_mvec* primal,
                              extalg_mvec** out) {
  if (!dual || !primal || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Multivector x = single_grade(dual->value, "contract dual");
    if (x.grade() != 1) {
      // a zero dual parsed from JSON has indeterminate grade; treat as grade 1
      if (x.is_zero()) {
        x = extalg::Multivector(dual->value.ambient(), 1);
      } else {
        throw extalg::DomainError("contract: dual factor must have grade 1");
      }
    }
    extalg::Multivector v = single_grade(primal->value, "contract primal");
    extalg::Multivector result = extalg::contract(extalg::Dual<extalg::Multivector>{x}, v);
    *out = new extalg_mvec{extalg::GradedElement(result)};
  });
}

/* --- tensors --- */

extalg_status extalg_tensor_from_json(const char* json, extalg_tensor** out) {
  if (!json || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    auto parsed = extalg::tensor_from_json(extalg::parse_json_text(json));
    *out = new extalg_tensor{std::move(parsed)};
  });
}

extalg_status extalg_tensor_to_json(const extalg_tensor* t, char** out) {
  if (!t || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(extalg::dump_json(extalg::tensor_to_json(t->value))); });
}

void extalg_tensor_free(extalg_tensor* t) { delete t; }

extalg_status extalg_tensor_product(const extalg_tensor* s, const extalg_tensor* t,
                                    extalg_tensor** out) {
  if (!s || !t || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_tensor{extalg::tensor_product(s->value, t->value)}; });
}

extalg_status extalg_tensor_alt(const extalg_tensor* t, extalg_tensor** out) {
  if (!t || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_tensor{extalg::alt(t->value)}; });
}

extalg_status extalg_tensor_is_alternating(const extalg_tensor* t, int* out) {
  if (!t || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = extalg::is_alternating(t->value) ? 1 : 0; });
}

extalg_status extalg_mvec_embed(const extalg_mvec* v, extalg_tensor** out) {
  if (!v || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    extalg::Multivector mv = single_grade(v->value, "embed");
    *out = new extalg_tensor{extalg::embed_multivector(mv)};
  });
}

extalg_status extalg_tensor_project(const extalg_tensor* t, extalg_mvec** out) {
  if (!t || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = new extalg_mvec{extalg::GradedElement(extalg::project_multivector(t->value))};
  });
}

/* --- forms --- */

extalg_status extalg_form_from_json(const char* json, extalg_form** out) {
  if (!json || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    auto parsed = extalg::form_from_json(extalg::parse_json_text(json));
    *out = new extalg_form{std::move(parsed)};
  });
}

extalg_status extalg_form_to_json(const extalg_form* f, char** out) {
  if (!f || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = dup_string(extalg::dump_json(extalg::form_to_json(f->value))); });
}

void extalg_form_free(extalg_form* f) { delete f; }

extalg_status extalg_form_wedge(const extalg_form* a, const extalg_form* b, extalg_form** out) {
  if (!a || !b || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_form{extalg::wedge(a->value, b->value)}; });
}

extalg_status extalg_form_d(const extalg_form* a, extalg_form** out) {
  if (!a || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] { *out = new extalg_form{extalg::exterior_derivative(a->value)}; });
}

extalg_status extalg_form_evaluate(const extalg_form* a, const char* point, extalg_mvec** out) {
  if (!a || !point || !out) return fail(EXTALG_ERR_DOMAIN, "null argument");
  return guarded([&] {
    std::vector<extalg::Rational> coords;
    std::string text(point);
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
      coords.push_back(parse_rational_or_throw(piece.c_str()));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    *out = new extalg_mvec{extalg::evaluate(a->value, coords)};
  });
}

/* --- check suites --- */

extalg_status extalg_run_check(const char* suite, int n, long long trials, uint64_t seed,
                               char** report) {
  if (!suite || !report) return fail(EXTALG_ERR_DOMAIN, "null argument");
  extalg_status code = EXTALG_OK;
  extalg_status rc = guarded([&] {
    extalg::CheckResult result = extalg::run_check(suite, n, trials, seed);
    *report = dup_string(result.report);
    if (!result.passed) code = EXTALG_ERR_CHECK_FAILED;
  });
  if (rc != EXTALG_OK) return rc;
  if (code != EXTALG_OK) g_last_error = "check: property violation";
  return code;
}

}  // extern "C"
