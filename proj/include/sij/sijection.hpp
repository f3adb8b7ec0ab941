#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sij/signed_set.hpp"

namespace sij {

enum class Side : std::uint8_t { Domain, Codomain };

inline Side other(Side s) { return s == Side::Domain ? Side::Codomain : Side::Domain; }

struct SidedElement {
  Side side = Side::Domain;
  Element element;

  friend bool operator==(const SidedElement& a, const SidedElement& b) {
    return a.side == b.side && a.element == b.element;
  }
  nlohmann::json to_json() const;
};

struct SidedElementHash {
  std::size_t operator()(const SidedElement& x) const {
    return x.element.hash() * 2 + static_cast<std::size_t>(x.side);
  }
};

// Raised when sijections are wired together inconsistently (mismatched sets,
// violated parameter preconditions).
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ApplyFn = std::function<SidedElement(const SidedElement&)>;

// An involution on Dom ⊔ Cod exchanging Dom⁺ ⊔ Cod⁻ with Dom⁻ ⊔ Cod⁺.
class Sijection {
 public:
  Sijection(std::string name, SignedSet domain, SignedSet codomain, ApplyFn apply);
  Sijection(std::string name, SignedSet domain, SignedSet codomain, std::shared_ptr<const ApplyFn> apply);

  const std::string& name() const { return name_; }
  const SignedSet& domain() const { return domain_; }
  const SignedSet& codomain() const { return codomain_; }
  const std::shared_ptr<const ApplyFn>& fn() const { return apply_; }

  SidedElement operator()(const SidedElement& x) const { return (*apply_)(x); }
  SidedElement forward(const Element& e) const { return (*apply_)({Side::Domain, e}); }
  SidedElement backward(const Element& e) const { return (*apply_)({Side::Codomain, e}); }

 private:
  std::string name_;
  SignedSet domain_;
  SignedSet codomain_;
  std::shared_ptr<const ApplyFn> apply_;
};

using ElementMap = std::function<Element(const Element&)>;

Sijection identity(const SignedSet& s);
Sijection inverse(const Sijection& phi);
// -φ : -S ⇒ -T, same underlying map.
Sijection negate(const Sijection& phi);
// Same map, different (element-compatible) set descriptors.
Sijection rebind(const Sijection& phi, std::string name, SignedSet domain, SignedSet codomain);

// Garsia–Milne composition of phi : S ⇒ T and psi : T ⇒ U.
Sijection compose(const Sijection& phi, const Sijection& psi);
// compose_all({a, b, c}) = c ∘ b ∘ a.
Sijection compose_all(const std::vector<Sijection>& chain);

Sijection product(const std::vector<Sijection>& factors);

// Sign-preserving bijection `forward` : from → to with inverse `backward`.
Sijection relabel(std::string name, SignedSet from, SignedSet to, ElementMap forward, ElementMap backward);
// Called with every sijection built by relabel(); used by audits of re-tagging steps.
// Not synchronised: install before building sijections on other threads.
void set_relabel_observer(std::function<void(const Sijection&)> observer);
// Sijection S ⇒ ∅ from a sign-reversing involution on S.
Sijection involution_to_empty(std::string name, SignedSet s, ElementMap involution);

// Fibre sijection for disjoint unions: given an index element on a side,
// returns φ_t : S_t ⇒ S_ψ(t) (for codomain-side t the sijection goes the
// other way, i.e. from the codomain family's fibre).
using FibreRule = std::function<Sijection(const SidedElement&)>;

// ⨆_{t∈T} S_t ⇒ ⨆_{t∈T̃} S̃_t over psi : T ⇒ T̃. `domain_family` / `codomain_family`
// give the fibres; without `fibres` every φ_t is the identity.
Sijection disjoint_union(std::string name, const Sijection& psi, const SignedSet& domain_family_set,
                         const SignedSet& codomain_family_set, FibreRule fibres = {});

// Tagwise union ⨆_{t∈T} S⁰_t ⇒ ⨆_{t∈T} S¹_t with φ_t : S⁰_t ⇒ S¹_t.
Sijection union_map(std::string name, const SignedSet& from, const SignedSet& to,
                    std::function<Sijection(const Element&)> fibres);

// Union of sijections over the same index layout as SignedSet::union_of.
Sijection union_of(const std::vector<Sijection>& parts, Int first = 0);

struct VerifyOptions {
  unsigned jobs = 1;
  std::size_t max_failures = 10;
  // Also require ξ(φ(e)) = ξ(e), reusing the images computed for the other checks.
  bool check_normal = false;
};

struct Failure {
  std::string kind;
  SidedElement input;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  SignedCounts domain;
  SignedCounts codomain;
  std::size_t pair_count = 0;
  std::size_t crossing_pairs = 0;
  bool ok = true;
  std::optional<bool> normal;
  std::vector<Failure> failures;

  nlohmann::json to_json() const;
};

// Exhaustive check: membership of images, involution, sign-class reversal.
VerificationReport verify(const Sijection& phi, const VerifyOptions& opts = {});
// ξ(φ(e)) = ξ(e) for every element of Dom ⊔ Cod.
bool is_normal(const Sijection& phi);

nlohmann::json count_to_json(const Count& c);

}  // namespace sij
