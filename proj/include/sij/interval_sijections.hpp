#pragma once

#include <vector>

#include "sij/sijection.hpp"

namespace sij {

// [a,c] ⇒ [a,b] ⊔ [b+1,c]
Sijection alpha(Int a, Int b, Int c);
// [a,c] ⇒ [a,b] ⊔ -[c+1,b], i.e. alpha with the second part rewritten.
Sijection alpha_split(Int a, Int b, Int c);

// ⨆_{(l1,l2) ∈ [a+1,b+1]×[a,b]} [l1,l2] ⇒ ∅
SignedSet to_empty_domain(Int a, Int b);
Sijection to_empty(Int a, Int b);

// ({v},∅) ⊔ (∅,{w}); elements Tagged(v,0) and Tagged(w,1).
SignedSet corner_set(Int v, Int w);
// S_1 × ... × S_m with S_i = corner_set(a_i, b_i + 1).
SignedSet corner_index(const std::vector<Int>& a, const std::vector<Int>& b);
// Integer values of a corner tuple (Tagged(v, side) items).
std::vector<Int> corner_values(const Element& corners);

// ⨆_{L ∈ S_1×…×S_{n-1}} [L_1,L_2] × … × [L_{n-1},x]
SignedSet beta_codomain(const std::vector<Int>& a, const std::vector<Int>& b, Int x);
// [a_1,b_1] × … × [a_{n-1},b_{n-1}] ⇒ beta_codomain(a,b,x)
Sijection beta(const std::vector<Int>& a, const std::vector<Int>& b, Int x);

// Row k with k_i replaced by x+n-i (1-based i).
std::vector<Int> gamma_row(const std::vector<Int>& k, Int x, int i);
// The i-th box of the second family (1 ≤ i ≤ n-2).
SignedSet gamma_second_box(const std::vector<Int>& k, Int x, int i);
// (⨆_{i=1}^n chain_box(gamma_row(k,x,i))) ⊔ (⨆_{i=1}^{n-2} gamma_second_box(k,x,i));
// elements Tagged(Tagged(y, i), part).
SignedSet gamma_codomain(const std::vector<Int>& k, Int x);
// chain_box(k) ⇒ gamma_codomain(k, x)
Sijection gamma_box(const std::vector<Int>& k, Int x);

}  // namespace sij
