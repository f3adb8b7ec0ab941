#pragma once

#include <vector>

#include "sij/sijection.hpp"

namespace sij {

using Rows = std::vector<std::vector<Int>>;  // top row first

// GT(k) = ⨆_{l ∈ [k1,k2]×…×[k_{n-1},k_n]} GT(l), GT(k1) = GT() = ({·},∅).
// Elements of GT(k), n ≥ 2, are Tagged(A, l) with A ∈ GT(l).
SignedSet gt_set(const std::vector<Int>& k);
// ⨆_{l ∈ index} GT(l); the rule name is shared with gt_set.
SignedSet gt_union(const SignedSet& index);
SignedCounts gt_counts(const std::vector<Int>& k);

// ∏_{i<j} (k_j - k_i + j - i)/(j - i), exact.
Count gt_polynomial(const std::vector<Int>& k);

Rows gt_decode(const std::vector<Int>& k, const Element& e);
// Validates the two-sided betweenness condition; throws std::invalid_argument.
Element gt_encode(const Rows& rows);
bool gt_rows_valid(const Rows& rows);
// (-1)^(number of strict descents inside rows)
int gt_rows_sign(const Rows& rows);

nlohmann::json rows_to_json(const Rows& rows);
Rows rows_from_json(const nlohmann::json& j);

// ⨆_{l ∈ box(a,b)} GT(l) ⇒ ⨆_{L ∈ S_1×…×S_{n-1}} GT(L_1,…,L_{n-1},x)
SignedSet rho_codomain(const std::vector<Int>& a, const std::vector<Int>& b, Int x);
Sijection rho(const std::vector<Int>& a, const std::vector<Int>& b, Int x);

// (k_1,…,k_{i-1}, k_{i+1}+1, k_i-1, k_{i+2},…,k_n), 1-based i.
std::vector<Int> pi_row(const std::vector<Int>& k, int i);
// GT(k) ⇒ -GT(pi_row(k,i))
Sijection pi(const std::vector<Int>& k, int i);
// Sign-reversing involution on ⨆_r GT(r) built from pi: for A ∈ GT(r) returns
// (Domain, A') with A' ∈ GT(r) or (Codomain, A') with A' ∈ GT(pi_row(r,i)).
SidedElement pi_swap(const std::vector<Int>& r, int i, const Element& a);
// ⨆_{l ∈ box(a,b)} GT(l) ⇒ ∅, needs a_{i+1} = a_i - 1 and b_{i+1} = b_i - 1.
Sijection sigma(const std::vector<Int>& a, const std::vector<Int>& b, int i);

// ⨆_{i=1}^n GT(k_1,…,k_{i-1}, x+n-i, k_{i+1},…,k_n); elements Tagged(A, i).
SignedSet tau_codomain(const std::vector<Int>& k, Int x);
Sijection tau(const std::vector<Int>& k, Int x);

}  // namespace sij
