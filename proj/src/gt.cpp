#include "sij/gt.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "sij/interval_sijections.hpp"
#include "sij/memo.hpp"

namespace sij {
namespace {

MemoTable<SignedSet>& set_cache() {
  static MemoTable<SignedSet> table;
  return table;
}

MemoTable<SignedCounts>& count_cache() {
  static MemoTable<SignedCounts> table;
  return table;
}

MemoTable<Sijection>& sij_cache() {
  static MemoTable<Sijection> table;
  return table;
}

std::string fmt(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int tag_of(const Element& e) { return static_cast<int>(e.tag().as_int()); }

std::vector<std::pair<Int, Int>> chain_bounds(const std::vector<Int>& k) {
  std::vector<std::pair<Int, Int>> out;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) out.emplace_back(k[i], k[i + 1]);
  return out;
}

// ⨆_{l ∈ index} -GT(l)
SignedSet neg_gt_union(const SignedSet& index) {
  return SignedSet::disjoint_union(index, "-GT", [](const Element& l) {
    return SignedSet::opposite(gt_set(l.to_ints()));
  });
}

Element retag_assoc(const Element& e) {
  // Tagged(A, Tagged(Y, t)) -> Tagged(Tagged(A, Y), t)
  return Element::tagged(Element::tagged(e.value(), e.tag().value()), e.tag().tag());
}

Element retag_assoc_back(const Element& e) {
  return Element::tagged(e.value().value(), Element::tagged(e.value().tag(), e.tag()));
}

}  // namespace

SignedSet gt_union(const SignedSet& index) {
  return SignedSet::disjoint_union(index, "GT", [](const Element& l) { return gt_set(l.to_ints()); });
}

SignedSet gt_set(const std::vector<Int>& k) {
  return set_cache().get(KeyBuilder("gt").add(k).str(), [&] {
    if (k.size() <= 1) return SignedSet::singleton(Element::dot(), 1);
    return SignedSet::disjoint_union(
        chain_box(k), "GT", [](const Element& l) { return gt_set(l.to_ints()); }, std::nullopt,
        [k] { return gt_counts(k); });
  });
}

SignedCounts gt_counts(const std::vector<Int>& k) {
  if (k.size() <= 1) return {1, 0};
  return count_cache().get(KeyBuilder("gtc").add(k).str(), [&] {
    SignedCounts acc;
    chain_box(k).for_each([&](const Element& l, int sign) { acc.add(gt_counts(l.to_ints()), sign); });
    return acc;
  });
}

Count gt_polynomial(const std::vector<Int>& k) {
  using boost::multiprecision::cpp_rational;
  cpp_rational acc = 1;
  const Int n = static_cast<Int>(k.size());
  for (Int i = 0; i < n; ++i)
    for (Int j = i + 1; j < n; ++j) acc *= cpp_rational(k[j] - k[i] + j - i, j - i);
  if (denominator(acc) != 1) throw std::logic_error("gt_polynomial: non-integral value");
  return numerator(acc);
}

Rows gt_decode(const std::vector<Int>& k, const Element& e) {
  if (k.size() <= 1) return k.empty() ? Rows{} : Rows{k};
  Rows rows = gt_decode(e.tag().to_ints(), e.value());
  rows.push_back(k);
  return rows;
}

bool gt_rows_valid(const Rows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i + 1) return false;
    if (i == 0) continue;
    const auto& up = rows[i - 1];
    const auto& down = rows[i];
    for (std::size_t j = 0; j < up.size(); ++j) {
      bool weak = down[j] <= up[j] && up[j] <= down[j + 1];
      bool strict = down[j] > up[j] && up[j] > down[j + 1];
      if (!weak && !strict) return false;
    }
  }
  return true;
}

int gt_rows_sign(const Rows& rows) {
  int sign = 1;
  for (const auto& r : rows)
    for (std::size_t j = 0; j + 1 < r.size(); ++j)
      if (r[j] > r[j + 1]) sign = -sign;
  return sign;
}

Element gt_encode(const Rows& rows) {
  if (!gt_rows_valid(rows)) throw std::invalid_argument("not a GT pattern: " + rows_to_json(rows).dump());
  Element e = Element::dot();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) e = Element::tagged(e, Element::ints(rows[i]));
  return e;
}

nlohmann::json rows_to_json(const Rows& rows) { return {{"rows", rows}}; }

Rows rows_from_json(const nlohmann::json& j) {
  const auto& r = j.is_object() ? j.at("rows") : j;
  if (!r.is_array()) throw std::invalid_argument("rows must be an array of arrays");
  Rows rows;
  for (const auto& row : r) {
    if (!row.is_array()) throw std::invalid_argument("rows must be an array of arrays");
    std::vector<Int> v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw std::invalid_argument("row entries must be integers");
      v.push_back(x.get<Int>());
    }
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != i + 1) throw std::invalid_argument("row " + std::to_string(i + 1) + " has wrong length");
  return rows;
}

SignedSet rho_codomain(const std::vector<Int>& a, const std::vector<Int>& b, Int x) {
  return SignedSet::disjoint_union(corner_index(a, b), "GTx;" + std::to_string(x), [x](const Element& l) {
    auto row = corner_values(l);
    row.push_back(x);
    return gt_set(row);
  });
}

Sijection rho(const std::vector<Int>& a, const std::vector<Int>& b, Int x) {
  return sij_cache().get(KeyBuilder("rho").add(a).add(b).add(x).str(), [&]() -> Sijection {
    const std::string name = "rho(" + fmt(a) + "," + fmt(b) + "," + std::to_string(x) + ")";
    std::vector<std::pair<Int, Int>> bounds;
    for (std::size_t i = 0; i < a.size(); ++i) bounds.emplace_back(a[i], b[i]);
    SignedSet dom = gt_union(box(bounds));
    SignedSet cod = rho_codomain(a, b, x);
    if (a.empty()) {
      auto same = [](const Element& e) { return e; };
      return relabel(name, dom, cod, same, same);
    }
    Sijection be = beta(a, b, x);
    SignedSet bc = be.codomain();
    SignedSet lifted = SignedSet::disjoint_union(bc, "GTxi", [bc](const Element& t) { return gt_set(bc.xi(t)); });
    auto s1 = disjoint_union("lift", be, dom, lifted);
    auto s2 = relabel("assoc", lifted, cod, retag_assoc, retag_assoc_back);
    return rebind(compose(s1, s2), name, dom, cod);
  });
}

std::vector<Int> pi_row(const std::vector<Int>& k, int i) {
  std::vector<Int> out = k;
  out[i - 1] = k[i] + 1;
  out[i] = k[i - 1] - 1;
  return out;
}

Sijection pi(const std::vector<Int>& k, int i) {
  const int n = static_cast<int>(k.size());
  if (n < 2 || i < 1 || i > n - 1) throw ConfigurationError("pi: index out of range");
  return sij_cache().get(KeyBuilder("pi").add(k).add(i).str(), [&]() -> Sijection {
    const std::string name = "pi(" + fmt(k) + "," + std::to_string(i) + ")";
    const std::vector<Int> kp = pi_row(k, i);
    SignedSet dom = gt_set(k);
    SignedSet cod = SignedSet::opposite(gt_set(kp));
    auto same = [](const Element& e) { return e; };
    if (n == 2) return relabel(name, dom, cod, same, same);

    // 1-based helpers: K(j) = k_j.
    auto K = [&](int j) { return k[j - 1]; };
    auto bounds = chain_bounds(k);
    bounds[i - 1] = {K(i + 1) + 1, K(i) - 1};
    SignedSet swapped = box(bounds);
    SignedSet w1 = neg_gt_union(swapped);
    auto s1 = relabel("negate", dom, w1, same, same);

    const bool left = i >= 2;
    const bool right = i + 1 <= n - 1;
    std::vector<Sijection> cut;
    for (int j = 1; j <= n - 1; ++j) {
      if (left && j == i - 1)
        cut.push_back(alpha(K(i - 1), K(i + 1) + 1, K(i)));
      else if (right && j == i + 1)
        cut.push_back(alpha(K(i + 1), K(i) - 2, K(i + 2)));
      else
        cut.push_back(identity(SignedSet::interval(bounds[j - 1].first, bounds[j - 1].second)));
    }
    auto p1 = product(cut);

    // Parts in order: kept, then those cancelled by σ.
    struct Part {
      int l, r;  // chosen side of the left / right cut (-1 if no cut)
      int sigma;  // σ position (0 for the kept part)
    };
    std::vector<Part> parts;
    if (left && right) {
      parts = {{0, 1, 0}, {0, 0, i}, {1, 1, i - 1}, {1, 0, i}};
    } else if (right) {
      parts = {{-1, 1, 0}, {-1, 0, i}};
    } else {
      parts = {{0, -1, 0}, {1, -1, i - 1}};
    }
    auto part_bounds = [&](const Part& p) {
      auto bb = bounds;
      if (left) bb[i - 2] = p.l == 0 ? std::pair{K(i - 1), K(i + 1) + 1} : std::pair{K(i + 1) + 2, K(i)};
      if (right) bb[i] = p.r == 0 ? std::pair{K(i + 1), K(i) - 2} : std::pair{K(i) - 1, K(i + 2)};
      return bb;
    };
    std::vector<SignedSet> part_boxes;
    for (const auto& p : parts) part_boxes.push_back(box(part_bounds(p)));
    SignedSet split_set = SignedSet::union_of(part_boxes);
    auto part_index = [parts](int l, int r) {
      for (std::size_t q = 0; q < parts.size(); ++q)
        if (parts[q].l == l && parts[q].r == r) return static_cast<Int>(q);
      throw std::logic_error("pi: unknown part");
    };
    auto p2 = relabel(
        "distribute", p1.codomain(), split_set,
        [=](const Element& e) {
          std::vector<Element> ys(e.items().begin(), e.items().end());
          int l = -1, r = -1;
          if (left) {
            l = tag_of(ys[i - 2]);
            ys[i - 2] = ys[i - 2].value();
          }
          if (right) {
            r = tag_of(ys[i]);
            ys[i] = ys[i].value();
          }
          return Element::tagged(Element::tuple(std::move(ys)), part_index(l, r));
        },
        [=](const Element& e) {
          const Part& p = parts.at(tag_of(e));
          std::vector<Element> ys(e.value().items().begin(), e.value().items().end());
          if (left) ys[i - 2] = Element::tagged(ys[i - 2], p.l);
          if (right) ys[i] = Element::tagged(ys[i], p.r);
          return Element::tuple(std::move(ys));
        });
    auto psi = compose(p1, p2);

    SignedSet w2 = SignedSet::disjoint_union(split_set, "-GTxi", [split_set](const Element& t) {
      return SignedSet::opposite(gt_set(split_set.xi(t)));
    });
    auto s2 = disjoint_union("lift", psi, w1, w2);

    std::vector<SignedSet> unions;
    for (const auto& b : part_boxes) unions.push_back(neg_gt_union(b));
    SignedSet w3 = SignedSet::union_of(unions);
    auto s3 = relabel("assoc", w2, w3, retag_assoc, retag_assoc_back);

    std::vector<Sijection> fibres;
    fibres.push_back(relabel("kept", unions[0], SignedSet::opposite(gt_set(kp)), same, same));
    for (std::size_t q = 1; q < parts.size(); ++q) {
      auto pb = part_bounds(parts[q]);
      std::vector<Int> lo, hi;
      for (auto [x, y] : pb) {
        lo.push_back(x);
        hi.push_back(y);
      }
      Sijection sg = sigma(lo, hi, parts[q].sigma);
      fibres.push_back(rebind(sg, sg.name(), unions[q], SignedSet::empty()));
    }
    auto s4 = union_of(fibres);
    auto s5 = relabel(
        "drop", s4.codomain(), cod, [](const Element& e) { return e.value(); },
        [](const Element& e) { return Element::tagged(e, 0); });
    return rebind(compose_all({s1, s2, s3, s4, s5}), name, dom, cod);
  });
}

SidedElement pi_swap(const std::vector<Int>& r, int i, const Element& a) {
  // pi(r',i) need not invert pi(r,i), so each pair {r, r'} goes through the
  // pi of the row with r_i <= r_{i+1}.
  if (r[i - 1] <= r[i]) return pi(r, i).forward(a);
  SidedElement q = pi(pi_row(r, i), i).backward(a);
  return {other(q.side), q.element};
}

Sijection sigma(const std::vector<Int>& a, const std::vector<Int>& b, int i) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n || n < 2 || i < 1 || i > n - 1)
    throw ConfigurationError("sigma: index out of range");
  if (a[i] != a[i - 1] - 1 || b[i] != b[i - 1] - 1)
    throw ConfigurationError("sigma: bounds are not shifted at position " + std::to_string(i));
  return sij_cache().get(KeyBuilder("sigma").add(a).add(b).add(i).str(), [&]() -> Sijection {
    std::vector<std::pair<Int, Int>> bounds;
    for (int j = 0; j < n; ++j) bounds.emplace_back(a[j], b[j]);
    return involution_to_empty("sigma(" + fmt(a) + "," + fmt(b) + "," + std::to_string(i) + ")", gt_union(box(bounds)),
                               [i](const Element& e) {
                                 std::vector<Int> l = e.tag().to_ints();
                                 SidedElement q = pi_swap(l, i, e.value());
                                 if (q.side == Side::Domain) return Element::tagged(q.element, e.tag());
                                 return Element::tagged(q.element, Element::ints(pi_row(l, i)));
                               });
  });
}

SignedSet tau_codomain(const std::vector<Int>& k, Int x) {
  const Int n = static_cast<Int>(k.size());
  return SignedSet::disjoint_union(SignedSet::interval(1, n), "tauT" + fmt(k) + ";" + std::to_string(x),
                                   [k, x](const Element& i) {
                                     return gt_set(gamma_row(k, x, static_cast<int>(i.as_int())));
                                   });
}

Sijection tau(const std::vector<Int>& k, Int x) {
  if (k.empty()) throw ConfigurationError("tau: empty row");
  return sij_cache().get(KeyBuilder("tau").add(k).add(x).str(), [&]() -> Sijection {
    const std::string name = "tau(" + fmt(k) + "," + std::to_string(x) + ")";
    const Int n = static_cast<Int>(k.size());
    SignedSet dom = gt_set(k);
    SignedSet cod = tau_codomain(k, x);
    if (n == 1) {
      return relabel(
          name, dom, cod, [](const Element& e) { return Element::tagged(e, 1); },
          [](const Element& e) { return e.value(); });
    }
    Sijection g = gamma_box(k, x);
    SignedSet gc = g.codomain();
    SignedSet lifted = SignedSet::disjoint_union(gc, "GTxi", [gc](const Element& t) { return gt_set(gc.xi(t)); });
    auto s1 = disjoint_union("lift", g, dom, lifted);

    SignedSet second = SignedSet::disjoint_union(
        SignedSet::interval(1, std::max<Int>(n - 2, 0)), "tauC" + fmt(k) + ";" + std::to_string(x),
        [k, x](const Element& i) { return gt_union(gamma_second_box(k, x, static_cast<int>(i.as_int()))); });
    SignedSet z2 = SignedSet::union_of({cod, second});
    auto s2 = relabel(
        "assoc", lifted, z2,
        [](const Element& e) {
          // Tagged(A, Tagged(Tagged(Y, i), part)) -> Tagged(Tagged(Tagged(A, Y), i), part)
          const Element& t = e.tag();
          return Element::tagged(Element::tagged(Element::tagged(e.value(), t.value().value()), t.value().tag()),
                                 t.tag());
        },
        [](const Element& e) {
          const Element& inner = e.value();
          return Element::tagged(inner.value().value(),
                                 Element::tagged(Element::tagged(inner.value().tag(), inner.tag()), e.tag()));
        });
    auto cancel = involution_to_empty("sigma-family", second, [k, x](const Element& e) {
      int i = static_cast<int>(e.tag().as_int());
      SignedSet b = gamma_second_box(k, x, i);
      std::vector<Int> lo, hi;
      for (const auto& f : b.factors()) {
        lo.push_back(f.lo());
        hi.push_back(f.hi());
      }
      SidedElement q = sigma(lo, hi, i).forward(e.value());
      return Element::tagged(q.element, e.tag());
    });
    auto s3 = union_of({identity(cod), cancel});
    auto s4 = relabel(
        "drop", s3.codomain(), cod, [](const Element& e) { return e.value(); },
        [](const Element& e) { return Element::tagged(e, 0); });
    return rebind(compose_all({s1, s2, s3, s4}), name, dom, cod);
  });
}

}  // namespace sij
