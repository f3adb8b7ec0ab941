#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sij/gt.hpp"

namespace sij {

struct OperatorOptions {
  int cap = 7;             // refuse n above this
  bool reference = false;  // one term per monomial instead of grouping equal shifts
  unsigned jobs = 1;
};

// ∏_{p<q} (E_{k_p} + E_{k_q}^{-1} − E_{k_p}E_{k_q}^{-1}) applied to the GT polynomial, then k specialised.
// Each monomial is a pure shift, so this is Σ sign · gt_polynomial(k + shift).
Count operator_formula(const std::vector<Int>& k, const OperatorOptions& opts = {});
// ∏_{i=0}^{n-1} (3i+1)!/(n+i)!
Count asm_formula(int n);

using Matrix = std::vector<std::vector<Int>>;

// Empty when A is an ASM, otherwise one message per violated row or column.
std::vector<std::string> asm_violations(const Matrix& a);
// Rows top to bottom; row r lists the columns (1-based) where the first r rows sum to 1.
Rows asm_to_mt(const Matrix& a);
Matrix mt_to_asm(const Rows& rows);
// Brute force: all n×n ASMs, in lexicographic order of their rows.
std::vector<Matrix> all_asms(int n);

Matrix matrix_from_json(const nlohmann::json& j);
// JSON array of arrays, or whitespace separated rows one per line.
Matrix matrix_from_text(const std::string& text);

}  // namespace sij
