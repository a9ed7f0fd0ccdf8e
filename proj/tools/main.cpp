// extalg command-line front end. Batch tool over canonical JSON files; all
// structured I/O goes through the C API in extalg.h.
//
// Exit codes: 0 success, 1 property violation (check) or internal failure,
// 2 malformed input or invalid flags, 3 dimension/shape mismatch,
// 4 complexity refusal. Nothing is written to stdout on a nonzero exit,
// except the check report, which is printed even when a property fails.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "extalg.h"

namespace {

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr) Free(ptr);
  }
  T** out() { return &ptr; }
  const T* get() const { return ptr; }
};

using MatrixHandle = Handle<extalg_matrix, extalg_matrix_free>;
using MvecHandle = Handle<extalg_mvec, extalg_mvec_free>;
using TensorHandle = Handle<extalg_tensor, extalg_tensor_free>;
using FormHandle = Handle<extalg_form, extalg_form_free>;

struct OwnedString {
  char* ptr = nullptr;
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { extalg_string_free(ptr); }
  char** out() { return &ptr; }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int exit_code_for(extalg_status status, bool flag_context) {
  switch (status) {
    case EXTALG_OK:
      return 0;
    case EXTALG_ERR_CHECK_FAILED:
      return 1;
    case EXTALG_ERR_PARSE:
      return 2;
    case EXTALG_ERR_SHAPE:
      return 3;
    case EXTALG_ERR_REFUSED:
      return 4;
    case EXTALG_ERR_DOMAIN:
      return flag_context ? 2 : 3;
    default:
      return 1;
  }
}

int report_error(extalg_status status, bool flag_context = false) {
  std::cerr << "error: " << extalg_last_error() << "\n";
  return exit_code_for(status, flag_context);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

std::optional<std::vector<int>> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) return std::nullopt;
    try {
      size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size()) return std::nullopt;
      out.push_back(value);
    } catch (...) {
      return std::nullopt;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename HandleT, typename ParseFn>
int load(const std::string& path, ParseFn parse, HandleT& handle) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  extalg_status status = parse(text->c_str(), handle.out());
  if (status != EXTALG_OK) return report_error(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exterior-algebra toolkit"};
  app.require_subcommand(1);

  std::string out_path;

  // --- enum ---
  auto* cmd_enum = app.add_subcommand("enum", "list index words in lexicographic order");
  std::string enum_kind;
  int enum_n = 0, enum_m = 0;
  cmd_enum->add_option("kind", enum_kind, "comb | inj | place")
      ->required()
      ->check(CLI::IsMember({"comb", "inj", "place"}));
  cmd_enum->add_option("--n", enum_n, "ambient size")->required();
  cmd_enum->add_option("--m", enum_m, "word length")->required();
  cmd_enum->add_option("-o,--output", out_path, "write to file instead of stdout");

  // --- det ---
  auto* cmd_det = app.add_subcommand("det", "determinant of a square matrix");
  std::vector<std::string> det_files;
  std::string det_method = "leibniz";
  std::string det_rows;
  bool det_force = false;
  cmd_det->add_option("inputs", det_files, "matrix JSON file(s); binet-check takes two")
      ->required()
      ->expected(1, 2);
  cmd_det->add_option("--method", det_method, "leibniz | laplace | binet-check")
      ->check(CLI::IsMember({"leibniz", "laplace", "binet-check"}));
  cmd_det->add_option("--rows", det_rows, "1-based rowset for laplace, e.g. 1,3");
  cmd_det->add_flag("--force", det_force, "override the n > 10 Leibniz refusal");
  cmd_det->add_option("-o,--output", out_path);

  // --- minor ---
  auto* cmd_minor = app.add_subcommand("minor", "minor on row and column selections");
  std::string minor_file, minor_rows, minor_cols;
  cmd_minor->add_option("input", minor_file)->required();
  cmd_minor->add_option("--rows", minor_rows)->required();
  cmd_minor->add_option("--cols", minor_cols)->required();
  cmd_minor->add_option("-o,--output", out_path);

  // --- compound ---
  auto* cmd_compound = app.add_subcommand("compound", "compound matrix of m x m minors");
  std::string compound_file;
  int compound_m = 0;
  cmd_compound->add_option("input", compound_file)->required();
  cmd_compound->add_option("--m", compound_m, "minor size")->required();
  cmd_compound->add_option("-o,--output", out_path);

  // --- apply ---
  auto* cmd_apply = app.add_subcommand("apply", "apply the induced map to a multivector");
  std::string apply_matrix, apply_mvec;
  cmd_apply->add_option("matrix", apply_matrix)->required();
  cmd_apply->add_option("multivector", apply_mvec)->required();
  cmd_apply->add_option("-o,--output", out_path);

  // --- wedge ---
  auto* cmd_wedge = app.add_subcommand("wedge", "exterior product of two multivectors");
  std::string wedge_u, wedge_v;
  cmd_wedge->add_option("u", wedge_u)->required();
  cmd_wedge->add_option("v", wedge_v)->required();
  cmd_wedge->add_option("-o,--output", out_path);

  // --- alt ---
  auto* cmd_alt = app.add_subcommand("alt", "alternation projector on a tensor");
  std::string alt_file;
  cmd_alt->add_option("input", alt_file)->required();
  cmd_alt->add_option("-o,--output", out_path);

  // --- pair ---
  auto* cmd_pair = app.add_subcommand("pair", "dual pairing of chains");
  std::string pair_dual, pair_primal;
  cmd_pair->add_option("dual", pair_dual)->required();
  cmd_pair->add_option("primal", pair_primal)->required();
  cmd_pair->add_option("-o,--output", out_path);

  // --- contract ---
  auto* cmd_contract = app.add_subcommand("contract", "interior product by a grade-1 dual");
  std::string contract_dual, contract_primal;
  cmd_contract->add_option("dual", contract_dual)->required();
  cmd_contract->add_option("primal", contract_primal)->required();
  cmd_contract->add_option("-o,--output", out_path);

  // --- d ---
  auto* cmd_d = app.add_subcommand("d", "exterior derivative of a polynomial form");
  std::string d_file;
  cmd_d->add_option("input", d_file)->required();
  cmd_d->add_option("-o,--output", out_path);

  // --- check ---
  auto* cmd_check = app.add_subcommand("check", "run seeded property suites");
  std::string check_suite;
  int check_n = 0;
  long long check_trials = 0;
  std::uint64_t check_seed = 0;
  cmd_check->add_option("--suite", check_suite)
      ->required()
      ->check(CLI::IsMember(
          {"functoriality", "wedge", "alt", "laplace", "binet", "dforms", "all"}));
  cmd_check->add_option("--n", check_n, "dimension bound, 2..8")->required();
  cmd_check->add_option("--trials", check_trials)->required();
  cmd_check->add_option("--seed", check_seed)->required();
  cmd_check->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (cmd_enum->parsed()) {
    OwnedString text;
    extalg_status status = extalg_enum_listing(enum_kind.c_str(), enum_n, enum_m, text.out());
    if (status != EXTALG_OK) return report_error(status, /*flag_context=*/true);
    return emit(text.str(), out_path);
  }

  if (cmd_det->parsed()) {
    if (det_method == "binet-check") {
      if (det_files.size() != 2) {
        std::cerr << "error: binet-check needs two matrix files\n";
        return 2;
      }
      MatrixHandle a, b;
      if (int rc = load(det_files[0], extalg_matrix_from_json, a)) return rc;
      if (int rc = load(det_files[1], extalg_matrix_from_json, b)) return rc;
      OwnedString binet;
      extalg_status status = extalg_cauchy_binet(a.get(), b.get(), binet.out());
      if (status != EXTALG_OK) return report_error(status);
      MatrixHandle product;
      status = extalg_matrix_mul(a.get(), b.get(), product.out());
      if (status != EXTALG_OK) return report_error(status);
      OwnedString direct;
      status = extalg_det_leibniz(product.get(), det_force ? 1 : 0, direct.out());
      if (status != EXTALG_OK) return report_error(status);
      if (binet.str() != direct.str()) {
        std::cerr << "error: cauchy-binet sum " << binet.str() << " disagrees with det "
                  << direct.str() << "\n";
        return 1;
      }
      return emit(binet.str() + "\n", out_path);
    }
    if (det_files.size() != 1) {
      std::cerr << "error: method " << det_method << " takes one matrix file\n";
      return 2;
    }
    MatrixHandle a;
    if (int rc = load(det_files[0], extalg_matrix_from_json, a)) return rc;
    OwnedString value;
    extalg_status status;
    if (det_method == "laplace") {
      if (det_rows.empty()) {
        std::cerr << "error: --method laplace requires --rows\n";
        return 2;
      }
      auto rows = parse_int_list(det_rows);
      if (!rows) {
        std::cerr << "error: bad --rows list\n";
        return 2;
      }
      status = extalg_det_laplace(a.get(), rows->data(), static_cast<int>(rows->size()),
                                  value.out());
    } else {
      status = extalg_det_leibniz(a.get(), det_force ? 1 : 0, value.out());
    }
    if (status != EXTALG_OK) return report_error(status);
    return emit(value.str() + "\n", out_path);
  }

  if (cmd_minor->parsed()) {
    MatrixHandle a;
    if (int rc = load(minor_file, extalg_matrix_from_json, a)) return rc;
    auto rows = parse_int_list(minor_rows);
    auto cols = parse_int_list(minor_cols);
    if (!rows || !cols) {
      std::cerr << "error: bad --rows/--cols list\n";
      return 2;
    }
    OwnedString value;
    extalg_status status = extalg_minor(a.get(), rows->data(), static_cast<int>(rows->size()),
                                        cols->data(), static_cast<int>(cols->size()), value.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(value.str() + "\n", out_path);
  }

  if (cmd_compound->parsed()) {
    MatrixHandle a;
    if (int rc = load(compound_file, extalg_matrix_from_json, a)) return rc;
    MatrixHandle result;
    extalg_status status = extalg_compound(a.get(), compound_m, result.out());
    if (status != EXTALG_OK) return report_error(status);
    OwnedString text;
    status = extalg_matrix_to_json(result.get(), text.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(text.str() + "\n", out_path);
  }

  if (cmd_apply->parsed()) {
    MatrixHandle a;
    MvecHandle v;
    if (int rc = load(apply_matrix, extalg_matrix_from_json, a)) return rc;
    if (int rc = load(apply_mvec, extalg_mvec_from_json, v)) return rc;
    MvecHandle result;
    extalg_status status = extalg_apply_map(a.get(), v.get(), result.out());
    if (status != EXTALG_OK) return report_error(status);
    OwnedString text;
    status = extalg_mvec_to_json(result.get(), text.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(text.str() + "\n", out_path);
  }

  if (cmd_wedge->parsed()) {
    MvecHandle u, v;
    if (int rc = load(wedge_u, extalg_mvec_from_json, u)) return rc;
    if (int rc = load(wedge_v, extalg_mvec_from_json, v)) return rc;
    MvecHandle result;
    extalg_status status = extalg_wedge(u.get(), v.get(), result.out());
    if (status != EXTALG_OK) return report_error(status);
    OwnedString text;
    status = extalg_mvec_to_json(result.get(), text.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(text.str() + "\n", out_path);
  }

  if (cmd_alt->parsed()) {
    TensorHandle t;
    if (int rc = load(alt_file, extalg_tensor_from_json, t)) return rc;
    TensorHandle result;
    extalg_status status = extalg_tensor_alt(t.get(), result.out());
    if (status != EXTALG_OK) return report_error(status);
    OwnedString text;
    status = extalg_tensor_to_json(result.get(), text.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(text.str() + "\n", out_path);
  }

  if (cmd_pair->parsed()) {
    MvecHandle w, v;
    if (int rc = load(pair_dual, extalg_mvec_from_json, w)) return rc;
    if (int rc = load(pair_primal, extalg_mvec_from_json, v)) return rc;
    OwnedString value;
    extalg_status status = extalg_pair(w.get(), v.get(), value.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(value.str() + "\n", out_path);
  }

  if (cmd_contract->parsed()) {
    MvecHandle x, v;
    if (int rc = load(contract_dual, extalg_mvec_from_json, x)) return rc;
    if (int rc = load(contract_primal, extalg_mvec_from_json, v)) return rc;
    MvecHandle result;
    extalg_status status = extalg_contract(x.get(), v.get(), result.out());
    if (status != EXTALG_OK) return report_error(status);
    OwnedString text;
    status = extalg_mvec_to_json(result.get(), text.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(text.str() + "\n", out_path);
  }

  if (cmd_d->parsed()) {
    FormHandle f;
    if (int rc = load(d_file, extalg_form_from_json, f)) return rc;
    FormHandle result;
    extalg_status status = extalg_form_d(f.get(), result.out());
    if (status != EXTALG_OK) return report_error(status);
    OwnedString text;
    status = extalg_form_to_json(result.get(), text.out());
    if (status != EXTALG_OK) return report_error(status);
    return emit(text.str() + "\n", out_path);
  }

  if (cmd_check->parsed()) {
    OwnedString report;
    extalg_status status =
        extalg_run_check(check_suite.c_str(), check_n, check_trials, check_seed, report.out());
    if (status == EXTALG_OK || status == EXTALG_ERR_CHECK_FAILED) {
      int rc = emit(report.str(), out_path);
      if (rc != 0) return rc;
      return status == EXTALG_OK ? 0 : 1;
    }
    return report_error(status, /*flag_context=*/true);
  }

  return 2;
}
