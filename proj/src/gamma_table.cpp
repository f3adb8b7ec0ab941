#include <unordered_set>

#include "sij/mt_sgt.hpp"

namespace sij {

namespace {

std::string rows_text(const Rows& rows) {
  std::string s;
  for (const auto& r : rows) {
    if (!s.empty()) s += ";";
    for (std::size_t j = 0; j < r.size(); ++j) s += (j ? "," : "") + std::to_string(r[j]);
  }
  return s;
}

struct SgtParts {
  Rows gt;
  std::vector<Int> pattern;
};

SgtParts sgt_parts(const std::vector<Int>& k, const Element& e) {
  std::vector<Int> t = e.tag().to_ints();
  return {gt_decode(deform_d(k, t), e.value()), t};
}

}  // namespace

std::vector<GammaPair> gamma_pairs(const Sijection& gamma) {
  std::vector<GammaPair> out;
  std::unordered_set<SidedElement, SidedElementHash> seen;
  auto visit = [&](Side side, const SignedSet& set) {
    for (const auto& [el, s] : set.elements()) {
      SidedElement a{side, el};
      if (seen.count(a)) continue;
      SidedElement b = gamma(a);
      seen.insert(a);
      seen.insert(b);
      out.push_back({a, b});
    }
  };
  visit(Side::Domain, gamma.domain());
  visit(Side::Codomain, gamma.codomain());
  return out;
}

nlohmann::json gamma_element_json(const std::vector<Int>& k, const SignedSet& set, const SidedElement& x) {
  nlohmann::json j;
  j["side"] = x.side == Side::Domain ? "domain" : "codomain";
  auto s = set.sign_of(x.element);
  if (!s) throw std::invalid_argument("gamma table: element outside its set");
  j["sign"] = *s;
  if (x.side == Side::Domain) {
    j["mt"] = rows_to_json(mt_decode(x.element));
  } else {
    auto p = sgt_parts(k, x.element);
    j["sgt"] = {{"gt", rows_to_json(p.gt)}, {"pattern", pattern_to_json(static_cast<int>(k.size()), p.pattern)}};
  }
  return j;
}

std::string gamma_element_text(const std::vector<Int>& k, const SidedElement& x) {
  if (x.side == Side::Domain) return "MT(" + rows_text(mt_decode(x.element)) + ")";
  auto p = sgt_parts(k, x.element);
  std::string s = "(GT(" + rows_text(p.gt) + "),";
  for (const auto& a : pattern_to_json(static_cast<int>(k.size()), p.pattern)) s += " " + a.get<std::string>();
  return s + ")";
}

}  // namespace sij
