#pragma once

#include <string>
#include <vector>

#include "sij/gt.hpp"

namespace sij {

// Arrow-row codes: ↗, ↖, ↖↗. Bit 0 is δ_↗, bit 1 is δ_↖.
inline constexpr Int kNE = 1;
inline constexpr Int kNW = 2;
inline constexpr Int kNWNE = 3;
// Arrow-pattern codes: ↙, ↘, ↙↘. Bit 0 is δ_↙, bit 1 is δ_↘.
inline constexpr Int kSW = 1;
inline constexpr Int kSE = 2;
inline constexpr Int kSWSE = 3;

inline Int delta_ne(Int a) { return a & 1; }
inline Int delta_nw(Int a) { return (a >> 1) & 1; }
inline Int delta_sw(Int t) { return t & 1; }
inline Int delta_se(Int t) { return (t >> 1) & 1; }
// ↙ ↔ ↗, ↘ ↔ ↖, ↙↘ ↔ ↖↗; with the codes above this is the identity.
inline Int eta(Int a) { return a; }

std::string arrow_row_name(Int code);      // "NE", "NW", "NWNE"
std::string arrow_pattern_name(Int code);  // "SW", "SE", "SWSE"
Int arrow_row_code(const std::string& name);
Int arrow_pattern_code(const std::string& name);

// AR_n; elements are ints(μ_1..μ_n).
SignedSet arrow_rows(int n);
// AP_n; elements are ints of the t_{p,q} in lexicographic (p,q) order.
SignedSet arrow_patterns(int n);
// Position of t_{p,q} (1 ≤ p < q ≤ n) in the flat pattern tuple.
std::size_t ap_index(int n, int p, int q);
// c_1(T),…,c_n(T) for T ∈ AP_n.
std::vector<Int> ap_shifts(int n, const std::vector<Int>& t);
// d(k,T)
std::vector<Int> deform_d(const std::vector<Int>& k, const std::vector<Int>& t);
// e(k,μ) as a signed box.
SignedSet deform_e(const std::vector<Int>& k, const std::vector<Int>& mu);

// Rows top to bottom: t_{1,n}; t_{1,n-1} t_{2,n}; …; t_{1,2} … t_{n-1,n}.
nlohmann::json pattern_to_json(int n, const std::vector<Int>& t);
std::vector<Int> pattern_from_json(int n, const nlohmann::json& j);

// l ≺ k, conditions (1)-(4).
bool interlaces(const std::vector<Int>& l, const std::vector<Int>& k);
int mt_sign(const Rows& rows);
bool mt_rows_valid(const Rows& rows);

// Elements are tuples of rows (ints), top row first, last row k.
SignedSet mt_set(const std::vector<Int>& k);
SignedCounts mt_counts(const std::vector<Int>& k);
Rows mt_decode(const Element& e);
Element mt_encode(const Rows& rows);

// SGT(k) = ⨆_{T ∈ AP_n} GT(d(k,T)); elements Tagged(A, T).
SignedSet sgt_set(const std::vector<Int>& k);
SignedCounts sgt_counts(const std::vector<Int>& k);

// ⨆_{μ ∈ AR_n} ⨆_{l ∈ e(k,μ)} MT(l); elements Tagged(Tagged(T', l), μ).
SignedSet xi_codomain(const std::vector<Int>& k);
// ⨆_{μ ∈ AR_n} ⨆_{l ∈ e(k,μ)} SGT(l); elements Tagged(Tagged(Tagged(A, T), l), μ).
SignedSet phi_domain(const std::vector<Int>& k);

// MT(k) ⇒ xi_codomain(k), n ≥ 2.
Sijection Xi(const std::vector<Int>& k);
// AP_{n-1} ⇒ AP_n, 1 ≤ i ≤ n.
Sijection Psi(int n, int i);
// AR_n ⇒ ({·},∅), 1 ≤ i ≤ n.
Sijection Lambda(int n, int i);
// phi_domain(k) ⇒ SGT(k)
Sijection Phi(const std::vector<Int>& k, Int x);
// MT(k) ⇒ SGT(k)
Sijection Gamma(const std::vector<Int>& k, Int x);

// One orbit {a, Γ(a)} of Γ on MT(k) ⊔ SGT(k).
struct GammaPair {
  SidedElement first, second;
};
// Domain orbits in enumeration order, then the remaining codomain orbits.
std::vector<GammaPair> gamma_pairs(const Sijection& gamma);
// {"side", "sign", "mt": {"rows"}} or {"side", "sign", "sgt": {"gt": {"rows"}, "pattern": [...]}}
nlohmann::json gamma_element_json(const std::vector<Int>& k, const SignedSet& set, const SidedElement& x);
// "MT(1;1,2;1,2,3)" or "(GT(1;1,1;1,1,1), SE SE SE)"
std::string gamma_element_text(const std::vector<Int>& k, const SidedElement& x);

}  // namespace sij
