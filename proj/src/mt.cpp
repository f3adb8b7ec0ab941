#include <map>
#include <memory>

#include "sij/memo.hpp"
#include "sij/mt_sgt.hpp"

namespace sij {
namespace {

std::string fmt(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

SignedCounts three_way_counts(std::size_t m) {
  // ({a,b},{c})^m: (3^m + 1)/2 positive, (3^m - 1)/2 negative.
  Count p = 1;
  for (std::size_t i = 0; i < m; ++i) p *= 3;
  return {(p + 1) / 2, (p - 1) / 2};
}

// All tuples in {1,2,3}^m, lexicographic; sign (-1)^{#3}.
SignedSet three_way_family(std::string key, std::size_t m) {
  FamilySpec spec;
  spec.key = std::move(key);
  spec.enumerate = [m](const Visitor& visit) {
    std::vector<Int> v(m, 1);
    while (true) {
      int sign = 1;
      for (Int c : v)
        if (c == 3) sign = -sign;
      visit(Element::ints(v), sign);
      std::size_t j = m;
      while (j > 0 && v[j - 1] == 3) v[--j] = 1;
      if (j == 0) return;
      ++v[j - 1];
    }
  };
  spec.sign_of = [m](const Element& e) -> std::optional<int> {
    if (e.kind() != Element::Kind::Tuple || e.arity() != m) return std::nullopt;
    int sign = 1;
    for (const auto& c : e.items()) {
      if (c.kind() != Element::Kind::Int || c.as_int() < 1 || c.as_int() > 3) return std::nullopt;
      if (c.as_int() == 3) sign = -sign;
    }
    return sign;
  };
  spec.counts = [m] { return three_way_counts(m); };
  return SignedSet::family(std::move(spec));
}

int descents(const std::vector<Int>& row) {
  int d = 0;
  for (std::size_t j = 0; j + 1 < row.size(); ++j)
    if (row[j] > row[j + 1]) ++d;
  return d;
}

// Number of j with k_j > l_j = k_{j+1} = l_{j+1} > k_{j+2}.
int touch_patterns(const std::vector<Int>& l, const std::vector<Int>& k) {
  int r = 0;
  for (std::size_t j = 0; j + 2 < k.size(); ++j)
    if (k[j] > l[j] && l[j] == k[j + 1] && k[j + 1] == l[j + 1] && l[j + 1] > k[j + 2]) ++r;
  return r;
}

int step_sign(const std::vector<Int>& l, const std::vector<Int>& k) {
  return (descents(k) + touch_patterns(l, k)) % 2 ? -1 : 1;
}

// Calls f(l) for every l ≺ k.
template <class F>
void for_each_interlacing(const std::vector<Int>& k, F&& f) {
  const std::size_t m = k.size() - 1;
  std::vector<Int> lo(m), hi(m), l(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = std::min(k[i], k[i + 1]);
    hi[i] = std::max(k[i], k[i + 1]);
  }
  l = lo;
  while (true) {
    if (interlaces(l, k)) f(l);
    std::size_t j = m;
    while (j > 0 && l[j - 1] == hi[j - 1]) {
      --j;
      l[j] = lo[j];
    }
    if (j == 0) return;
    ++l[j - 1];
  }
}

using ElementList = std::vector<std::pair<Element, int>>;

std::shared_ptr<const ElementList> mt_elements(const std::vector<Int>& k) {
  static MemoTable<std::shared_ptr<const ElementList>> table;
  return table.get(KeyBuilder("mte").add(k).str(), [&] {
    auto out = std::make_shared<ElementList>();
    Element bottom = Element::ints(k);
    if (k.size() == 1) {
      out->emplace_back(Element::tuple({bottom}), 1);
      return std::shared_ptr<const ElementList>(out);
    }
    for_each_interlacing(k, [&](const std::vector<Int>& l) {
      int s = step_sign(l, k);
      for (const auto& [t, st] : *mt_elements(l)) {
        std::vector<Element> rows(t.items().begin(), t.items().end());
        rows.push_back(bottom);
        out->emplace_back(Element::tuple(std::move(rows)), s * st);
      }
    });
    return std::shared_ptr<const ElementList>(out);
  });
}

std::vector<Int> toggle(std::vector<Int> v, std::size_t pos, Int a, Int b) {
  if (v[pos] == a)
    v[pos] = b;
  else if (v[pos] == b)
    v[pos] = a;
  else
    throw std::logic_error("toggle: unexpected symbol");
  return v;
}

}  // namespace

std::string arrow_row_name(Int code) {
  switch (code) {
    case kNE: return "NE";
    case kNW: return "NW";
    case kNWNE: return "NWNE";
  }
  throw std::invalid_argument("bad arrow-row code " + std::to_string(code));
}

std::string arrow_pattern_name(Int code) {
  switch (code) {
    case kSW: return "SW";
    case kSE: return "SE";
    case kSWSE: return "SWSE";
  }
  throw std::invalid_argument("bad arrow-pattern code " + std::to_string(code));
}

Int arrow_row_code(const std::string& name) {
  if (name == "NE") return kNE;
  if (name == "NW") return kNW;
  if (name == "NWNE") return kNWNE;
  throw std::invalid_argument("unknown arrow-row symbol '" + name + "'");
}

Int arrow_pattern_code(const std::string& name) {
  if (name == "SW") return kSW;
  if (name == "SE") return kSE;
  if (name == "SWSE") return kSWSE;
  throw std::invalid_argument("unknown arrow-pattern symbol '" + name + "'");
}

SignedSet arrow_rows(int n) {
  static MemoTable<SignedSet> table;
  return table.get(KeyBuilder("AR").add(n).str(),
                   [&] { return three_way_family("AR" + std::to_string(n), static_cast<std::size_t>(n)); });
}

SignedSet arrow_patterns(int n) {
  static MemoTable<SignedSet> table;
  return table.get(KeyBuilder("AP").add(n).str(), [&] {
    return three_way_family("AP" + std::to_string(n), static_cast<std::size_t>(n) * (n - 1) / 2);
  });
}

std::size_t ap_index(int n, int p, int q) {
  return static_cast<std::size_t>((p - 1) * (2 * n - p) / 2 + (q - p - 1));
}

std::vector<Int> ap_shifts(int n, const std::vector<Int>& t) {
  std::vector<Int> c(n, 0);
  std::size_t idx = 0;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q, ++idx) {
      c[p - 1] += delta_sw(t[idx]);
      c[q - 1] -= delta_se(t[idx]);
    }
  return c;
}

std::vector<Int> deform_d(const std::vector<Int>& k, const std::vector<Int>& t) {
  auto c = ap_shifts(static_cast<int>(k.size()), t);
  for (std::size_t i = 0; i < k.size(); ++i) c[i] += k[i];
  return c;
}

SignedSet deform_e(const std::vector<Int>& k, const std::vector<Int>& mu) {
  std::vector<std::pair<Int, Int>> b;
  for (std::size_t i = 0; i + 1 < k.size(); ++i)
    b.emplace_back(k[i] + delta_ne(mu[i]), k[i + 1] - delta_nw(mu[i + 1]));
  return box(b);
}

nlohmann::json pattern_to_json(int n, const std::vector<Int>& t) {
  auto out = nlohmann::json::array();
  for (int d = n - 1; d >= 1; --d)
    for (int p = 1; p + d <= n; ++p) out.push_back(arrow_pattern_name(t.at(ap_index(n, p, p + d))));
  return out;
}

std::vector<Int> pattern_from_json(int n, const nlohmann::json& j) {
  const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (!j.is_array() || j.size() != m)
    throw std::invalid_argument("arrow pattern needs " + std::to_string(m) + " symbols");
  std::vector<Int> t(m);
  std::size_t idx = 0;
  for (int d = n - 1; d >= 1; --d)
    for (int p = 1; p + d <= n; ++p) t[ap_index(n, p, p + d)] = arrow_pattern_code(j[idx++].get<std::string>());
  return t;
}

bool interlaces(const std::vector<Int>& l, const std::vector<Int>& k) {
  const std::size_t n = k.size();
  if (l.size() + 1 != n) return false;
  // 1-based accessors
  auto K = [&](std::size_t i) { return k[i - 1]; };
  auto L = [&](std::size_t i) { return l[i - 1]; };
  for (std::size_t i = 1; i + 1 <= n; ++i)
    if (L(i) < std::min(K(i), K(i + 1)) || L(i) > std::max(K(i), K(i + 1))) return false;
  for (std::size_t i = 2; i + 1 <= n; ++i)
    if (K(i - 1) <= K(i) && K(i) <= K(i + 1) && L(i - 1) == K(i) && L(i) == K(i)) return false;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    if (K(i) > L(i) && L(i) == K(i + 1) && !(i + 2 <= n && L(i + 1) == L(i))) return false;
    if (K(i) == L(i) && L(i) > K(i + 1) && !(i >= 2 && L(i - 1) == L(i))) return false;
  }
  return true;
}

bool mt_rows_valid(const Rows& rows) {
  if (rows.empty()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i + 1) return false;
    if (i > 0 && !interlaces(rows[i - 1], rows[i])) return false;
  }
  return true;
}

int mt_sign(const Rows& rows) {
  int r = descents(rows[0]);
  for (std::size_t i = 1; i < rows.size(); ++i) r += descents(rows[i]) + touch_patterns(rows[i - 1], rows[i]);
  return r % 2 ? -1 : 1;
}

Rows mt_decode(const Element& e) {
  Rows rows;
  for (const auto& r : e.items()) rows.push_back(r.to_ints());
  return rows;
}

Element mt_encode(const Rows& rows) {
  if (!mt_rows_valid(rows)) throw std::invalid_argument("not a monotone triangle: " + rows_to_json(rows).dump());
  std::vector<Element> items;
  for (const auto& r : rows) items.push_back(Element::ints(r));
  return Element::tuple(std::move(items));
}

SignedCounts mt_counts(const std::vector<Int>& k) {
  if (k.size() <= 1) return {1, 0};
  static MemoTable<SignedCounts> table;
  return table.get(KeyBuilder("mtc").add(k).str(), [&] {
    SignedCounts acc;
    for_each_interlacing(k, [&](const std::vector<Int>& l) { acc.add(mt_counts(l), step_sign(l, k)); });
    return acc;
  });
}

SignedSet mt_set(const std::vector<Int>& k) {
  if (k.empty()) throw std::invalid_argument("mt_set: empty bottom row");
  static MemoTable<SignedSet> table;
  return table.get(KeyBuilder("mt").add(k).str(), [&] {
    FamilySpec spec;
    spec.key = "MT" + fmt(k);
    spec.enumerate = [k](const Visitor& visit) {
      for (const auto& [e, s] : *mt_elements(k)) visit(e, s);
    };
    spec.sign_of = [k](const Element& e) -> std::optional<int> {
      if (e.kind() != Element::Kind::Tuple || e.arity() != k.size()) return std::nullopt;
      for (const auto& r : e.items())
        if (r.kind() != Element::Kind::Tuple) return std::nullopt;
      Rows rows = mt_decode(e);
      if (rows.back() != k || !mt_rows_valid(rows)) return std::nullopt;
      return mt_sign(rows);
    };
    spec.counts = [k] { return mt_counts(k); };
    return SignedSet::family(std::move(spec));
  });
}

SignedCounts sgt_counts(const std::vector<Int>& k) {
  static MemoTable<SignedCounts> table;
  return table.get(KeyBuilder("sgtc").add(k).str(), [&] {
    // Group arrow patterns by their shift vector c(T).
    const int n = static_cast<int>(k.size());
    std::map<std::vector<Int>, SignedCounts> w{{std::vector<Int>(n, 0), SignedCounts{1, 0}}};
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        std::map<std::vector<Int>, SignedCounts> next;
        for (const auto& [c, cnt] : w) {
          for (Int code : {kSW, kSE, kSWSE}) {
            auto d = c;
            d[p - 1] += delta_sw(code);
            d[q - 1] -= delta_se(code);
            next[d].add(cnt, code == kSWSE ? -1 : 1);
          }
        }
        w = std::move(next);
      }
    SignedCounts acc;
    for (const auto& [c, cnt] : w) {
      auto d = k;
      for (int i = 0; i < n; ++i) d[i] += c[i];
      auto g = gt_counts(d);
      acc.pos += cnt.pos * g.pos + cnt.neg * g.neg;
      acc.neg += cnt.pos * g.neg + cnt.neg * g.pos;
    }
    return acc;
  });
}

SignedSet sgt_set(const std::vector<Int>& k) {
  static MemoTable<SignedSet> table;
  return table.get(KeyBuilder("sgt").add(k).str(), [&] {
    const int n = static_cast<int>(k.size());
    return SignedSet::disjoint_union(
        arrow_patterns(n), "GTd" + fmt(k), [k](const Element& t) { return gt_set(deform_d(k, t.to_ints())); },
        std::nullopt, [k] { return sgt_counts(k); });
  });
}

SignedSet xi_codomain(const std::vector<Int>& k) {
  static MemoTable<SignedSet> table;
  return table.get(KeyBuilder("xicod").add(k).str(), [&] {
    return SignedSet::disjoint_union(arrow_rows(static_cast<int>(k.size())), "XiMT" + fmt(k), [k](const Element& mu) {
      return SignedSet::disjoint_union(deform_e(k, mu.to_ints()), "MT",
                                       [](const Element& l) { return mt_set(l.to_ints()); });
    });
  });
}

SignedSet phi_domain(const std::vector<Int>& k) {
  static MemoTable<SignedSet> table;
  return table.get(KeyBuilder("phidom").add(k).str(), [&] {
    return SignedSet::disjoint_union(arrow_rows(static_cast<int>(k.size())), "PhiSGT" + fmt(k), [k](const Element& mu) {
      return SignedSet::disjoint_union(deform_e(k, mu.to_ints()), "SGT",
                                       [](const Element& l) { return sgt_set(l.to_ints()); });
    });
  });
}

Sijection Xi(const std::vector<Int>& k) {
  const std::size_t n = k.size();
  if (n < 2) throw ConfigurationError("Xi needs a bottom row of length at least 2");
  static MemoTable<Sijection> table;
  return table.get(KeyBuilder("Xi").add(k).str(), [&] {
    auto K = [k](std::size_t i) { return k[i - 1]; };
    // Forward-rule cases for 1 < i < n: 1 for (1), 2 for (2), 3 otherwise.
    auto middle_case = [K](const std::vector<Int>& l, std::size_t i) {
      auto L = [&](std::size_t j) { return l[j - 1]; };
      if (K(i - 1) <= L(i - 1) && L(i - 1) == K(i)) return 1;
      if (K(i - 1) > L(i - 1) && L(i - 1) == K(i) && K(i) == L(i) && L(i) > K(i + 1)) return 2;
      return 3;
    };
    ApplyFn apply = [k, n, K, middle_case](const SidedElement& x) -> SidedElement {
      if (x.side == Side::Domain) {
        std::vector<Element> rows(x.element.items().begin(), x.element.items().end());
        rows.pop_back();
        std::vector<Int> l = rows.back().to_ints();
        std::vector<Int> mu(n);
        mu[0] = kNW;
        mu[n - 1] = kNE;
        for (std::size_t i = 2; i + 1 <= n; ++i) {
          int c = middle_case(l, i);
          mu[i - 1] = c == 1 ? kNE : c == 2 ? kNWNE : kNW;
        }
        if (!deform_e(k, mu).contains(Element::ints(l))) throw std::logic_error("Xi: forward image outside e(k,mu)");
        return {Side::Codomain,
                Element::tagged(Element::tagged(Element::tuple(std::move(rows)), Element::ints(l)), Element::ints(mu))};
      }
      const Element& tl = x.element.value();
      std::vector<Int> l = tl.tag().to_ints();
      std::vector<Int> mu = x.element.tag().to_ints();
      auto with_mu = [&](const std::vector<Int>& m) {
        return SidedElement{Side::Codomain, Element::tagged(tl, Element::ints(m))};
      };
      if (mu[0] != kNW) return with_mu(toggle(mu, 0, kNWNE, kNE));
      if (mu[n - 1] != kNE) return with_mu(toggle(mu, n - 1, kNWNE, kNW));
      // A middle arrow can trade δ_↖ when l_{i-1} ≠ k_i, else δ_↗ when l_i ≠ k_i;
      // either swap keeps l in e(k,μ) with the same sign.
      for (std::size_t i = 2; i + 1 <= n; ++i) {
        if (l[i - 2] != K(i)) {
          if (mu[i - 1] != kNW) return with_mu(toggle(mu, i - 1, kNWNE, kNE));
        } else if (l[i - 1] != K(i)) {
          if (mu[i - 1] != kNE) return with_mu(toggle(mu, i - 1, kNWNE, kNW));
        }
      }
      if (!interlaces(l, k)) throw std::logic_error("Xi: unmatched element outside the interlacing rows");
      std::vector<Element> rows(tl.value().items().begin(), tl.value().items().end());
      rows.push_back(Element::ints(k));
      return {Side::Domain, Element::tuple(std::move(rows))};
    };
    return Sijection("Xi" + fmt(k), mt_set(k), xi_codomain(k), std::move(apply));
  });
}

Sijection Psi(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw ConfigurationError("Psi: index out of range");
  static MemoTable<Sijection> table;
  return table.get(KeyBuilder("Psi").add(n).add(i).str(), [&] {
    ApplyFn apply = [n, i](const SidedElement& x) -> SidedElement {
      std::vector<Int> t = x.element.to_ints();
      if (x.side == Side::Domain) {
        std::vector<Int> out(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int p = 1; p <= n; ++p)
          for (int q = p + 1; q <= n; ++q) {
            Int v;
            if (q < i)
              v = t[ap_index(n - 1, p, q)];
            else if (p < i && i < q)
              v = t[ap_index(n - 1, p, q - 1)];
            else if (i < p)
              v = t[ap_index(n - 1, p - 1, q - 1)];
            else if (q == i)
              v = kSE;
            else
              v = kSW;
            out[ap_index(n, p, q)] = v;
          }
        return {Side::Codomain, Element::ints(out)};
      }
      for (int p = 1; p < i; ++p) {
        std::size_t at = ap_index(n, p, i);
        if (t[at] != kSE) {
          t = toggle(t, at, kSW, kSWSE);
          return {Side::Codomain, Element::ints(t)};
        }
      }
      for (int q = i + 1; q <= n; ++q) {
        std::size_t at = ap_index(n, i, q);
        if (t[at] != kSW) {
          t = toggle(t, at, kSE, kSWSE);
          return {Side::Codomain, Element::ints(t)};
        }
      }
      std::vector<Int> out(static_cast<std::size_t>(n - 1) * (n - 2) / 2);
      for (int p = 1; p <= n - 1; ++p)
        for (int q = p + 1; q <= n - 1; ++q) {
          Int v;
          if (q < i)
            v = t[ap_index(n, p, q)];
          else if (p < i)
            v = t[ap_index(n, p, q + 1)];
          else
            v = t[ap_index(n, p + 1, q + 1)];
          out[ap_index(n - 1, p, q)] = v;
        }
      return {Side::Domain, Element::ints(out)};
    };
    return Sijection("Psi(" + std::to_string(n) + "," + std::to_string(i) + ")", arrow_patterns(n - 1),
                     arrow_patterns(n), std::move(apply));
  });
}

Sijection Lambda(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw ConfigurationError("Lambda: index out of range");
  static MemoTable<Sijection> table;
  return table.get(KeyBuilder("Lambda").add(n).add(i).str(), [&] {
    std::vector<Int> target(n, kNE);
    for (int p = 0; p < i; ++p) target[p] = kNW;
    ApplyFn apply = [i, target](const SidedElement& x) -> SidedElement {
      if (x.side == Side::Codomain) return {Side::Domain, Element::ints(target)};
      std::vector<Int> mu = x.element.to_ints();
      if (mu == target) return {Side::Codomain, Element::dot()};
      std::size_t p = 0;
      while (mu[p] == target[p]) ++p;
      if (static_cast<int>(p) + 1 <= i) return {Side::Domain, Element::ints(toggle(mu, p, kNE, kNWNE))};
      return {Side::Domain, Element::ints(toggle(mu, p, kNW, kNWNE))};
    };
    return Sijection("Lambda(" + std::to_string(n) + "," + std::to_string(i) + ")", arrow_rows(n),
                     SignedSet::singleton(Element::dot(), 1), std::move(apply));
  });
}

}  // namespace sij
