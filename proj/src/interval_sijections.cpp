#include "sij/interval_sijections.hpp"

#include <algorithm>

#include "sij/memo.hpp"

namespace sij {
namespace {

MemoTable<Sijection>& cache() {
  static MemoTable<Sijection> table;
  return table;
}

std::string fmt(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<Int> slice(const std::vector<Int>& v, std::size_t from, std::size_t to) {
  return std::vector<Int>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

std::vector<Element> items_of(const Element& e) {
  auto it = e.items();
  return std::vector<Element>(it.begin(), it.end());
}

Element corner(Int v, int side) { return Element::tagged(Element::integer(v), side); }

int tag_of(const Element& e) { return static_cast<int>(e.tag().as_int()); }

}  // namespace

Sijection alpha(Int a, Int b, Int c) {
  return cache().get(KeyBuilder("alpha").add(a).add(b).add(c).str(), [&] {
    auto dom = SignedSet::interval(a, c);
    auto first = SignedSet::interval(a, b);
    auto second = SignedSet::interval(b + 1, c);
    auto cod = SignedSet::union_of({first, second});
    // Pointwise χ_[a,c] = χ_[a,b] + χ_[b+1,c]: at each x either the domain copy
    // matches the one non-zero codomain copy, or the two codomain copies cancel.
    auto apply = [first, second](const SidedElement& in) -> SidedElement {
      if (in.side == Side::Domain) {
        const Element& x = in.element;
        return {Side::Codomain, Element::tagged(x, first.contains(x) ? 0 : 1)};
      }
      const Element& x = in.element.value();
      if (tag_of(in.element) == 0) {
        if (second.contains(x)) return {Side::Codomain, Element::tagged(x, 1)};
        return {Side::Domain, x};
      }
      if (first.contains(x)) return {Side::Codomain, Element::tagged(x, 0)};
      return {Side::Domain, x};
    };
    return Sijection("alpha(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")", dom,
                     cod, apply);
  });
}

Sijection alpha_split(Int a, Int b, Int c) {
  return cache().get(KeyBuilder("alpha_split").add(a).add(b).add(c).str(), [&] {
    Sijection base = alpha(a, b, c);
    auto tail = SignedSet::interval(b + 1, c);
    auto flipped = SignedSet::opposite(SignedSet::interval(c + 1, b));
    auto same = [](const Element& e) { return e; };
    std::vector<Sijection> parts{identity(SignedSet::interval(a, b)),
                                 relabel("flip", tail, flipped, same, same)};
    return compose(base, union_of(parts));
  });
}

SignedSet to_empty_domain(Int a, Int b) {
  return SignedSet::disjoint_union(
      box({{a + 1, b + 1}, {a, b}}), "interval",
      [](const Element& l) { return SignedSet::interval(l[0].as_int(), l[1].as_int()); }, 1);
}

Sijection to_empty(Int a, Int b) {
  return cache().get(KeyBuilder("to_empty").add(a).add(b).str(), [&] {
    return involution_to_empty("to_empty(" + std::to_string(a) + "," + std::to_string(b) + ")",
                               to_empty_domain(a, b), [](const Element& e) {
                                 const Element& l = e.tag();
                                 Int l1 = l[0].as_int(), l2 = l[1].as_int();
                                 return Element::tagged(e.value(), Element::ints(std::vector<Int>{l2 + 1, l1 - 1}));
                               });
  });
}

SignedSet corner_set(Int v, Int w) {
  return SignedSet::union_of({SignedSet::singleton(Element::integer(v), 1, 1),
                              SignedSet::singleton(Element::integer(w), -1, 1)});
}

SignedSet corner_index(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<SignedSet> factors;
  for (std::size_t i = 0; i < a.size(); ++i) factors.push_back(corner_set(a[i], b[i] + 1));
  return SignedSet::product(std::move(factors));
}

std::vector<Int> corner_values(const Element& corners) {
  std::vector<Int> out;
  for (const auto& c : corners.items()) out.push_back(c.value().as_int());
  return out;
}

namespace {

// ⨆_{L ∈ index} chain_box(head..., L..., x) (optionally negated fibres).
SignedSet chained_union(const SignedSet& index, std::vector<Int> head, Int x, bool negated) {
  std::string name = std::string(negated ? "-chain" : "chain") + fmt(head) + ";" + std::to_string(x);
  int dim = static_cast<int>(head.size()) + static_cast<int>(index.factors().size());
  return SignedSet::disjoint_union(
      index, name,
      [head, x, negated](const Element& l) {
        std::vector<Int> row = head;
        for (Int v : corner_values(l)) row.push_back(v);
        row.push_back(x);
        auto s = chain_box(row);
        return negated ? SignedSet::opposite(s) : s;
      },
      dim);
}

}  // namespace

SignedSet beta_codomain(const std::vector<Int>& a, const std::vector<Int>& b, Int x) {
  return chained_union(corner_index(a, b), {}, x, false);
}

Sijection beta(const std::vector<Int>& a, const std::vector<Int>& b, Int x) {
  if (a.size() != b.size()) throw ConfigurationError("beta: a and b differ in length");
  return cache().get(KeyBuilder("beta").add(a).add(b).add(x).str(), [&]() -> Sijection {
    const std::string name = "beta(" + fmt(a) + "," + fmt(b) + "," + std::to_string(x) + ")";
    const std::size_t m = a.size();
    std::vector<std::pair<Int, Int>> bounds;
    for (std::size_t i = 0; i < m; ++i) bounds.emplace_back(a[i], b[i]);
    SignedSet dom = box(bounds);
    SignedSet cod = beta_codomain(a, b, x);

    if (m == 0) {
      return relabel(name, dom, cod, [](const Element& e) { return Element::tagged(e, Element::dot()); },
                     [](const Element& e) { return e.value(); });
    }
    const Int a1 = a[0], b1 = b[0];
    if (m == 1) {
      auto s1 = relabel("unwrap", dom, SignedSet::interval(a1, b1), [](const Element& e) { return e[0]; },
                        [](const Element& e) { return Element::tuple({e}); });
      auto s2 = alpha_split(a1, x, b1);
      auto s3 = relabel(
          "corners", s2.codomain(), cod,
          [a1, b1](const Element& e) {
            int side = tag_of(e);
            Element l = side == 0 ? corner(a1, 0) : corner(b1 + 1, 1);
            return Element::tagged(Element::tuple({e.value()}), Element::tuple({l}));
          },
          [](const Element& e) { return Element::tagged(e.value()[0], tag_of(e.tag()[0])); });
      auto out = compose_all({s1, s2, s3});
      return rebind(out, name, dom, cod);
    }

    const Int a2 = a[1], b2 = b[1];
    std::vector<Int> a_rest = slice(a, 1, m), b_rest = slice(b, 1, m);
    std::vector<Int> a_tail = slice(a, 2, m), b_tail = slice(b, 2, m);
    SignedSet first = SignedSet::interval(a1, b1);
    std::vector<std::pair<Int, Int>> rest_bounds(bounds.begin() + 1, bounds.end());

    SignedSet x1 = SignedSet::product({first, box(rest_bounds)});
    auto s1 = relabel(
        "split", dom, x1,
        [](const Element& e) {
          auto it = items_of(e);
          return Element::tuple({it[0], Element::tuple(std::vector<Element>(it.begin() + 1, it.end()))});
        },
        [](const Element& e) {
          std::vector<Element> out{e[0]};
          for (const auto& y : e[1].items()) out.push_back(y);
          return Element::tuple(std::move(out));
        });

    Sijection inner = beta(a_rest, b_rest, x);
    auto s2 = product({identity(first), inner});

    SignedSet tail_index = corner_index(a_tail, b_tail);
    SignedSet q0 = chained_union(tail_index, {a2}, x, false);
    SignedSet q1 = chained_union(tail_index, {b2 + 1}, x, true);
    SignedSet x3 = SignedSet::union_of({SignedSet::product({first, q0}), SignedSet::product({first, q1})});
    auto s3 = relabel(
        "distribute", s2.codomain(), x3,
        [](const Element& e) {
          const Element& y1 = e[0];
          const Element& rest = e[1];
          auto ls = items_of(rest.tag());
          int part = tag_of(ls[0]);
          Element tail = Element::tuple(std::vector<Element>(ls.begin() + 1, ls.end()));
          return Element::tagged(Element::tuple({y1, Element::tagged(rest.value(), tail)}), part);
        },
        [a2, b2](const Element& e) {
          int part = tag_of(e);
          const Element& pair = e.value();
          const Element& rest = pair[1];
          std::vector<Element> ls{part == 0 ? corner(a2, 0) : corner(b2 + 1, 1)};
          for (const auto& l : rest.tag().items()) ls.push_back(l);
          return Element::tuple({pair[0], Element::tagged(rest.value(), Element::tuple(std::move(ls)))});
        });

    auto s4 = union_of({product({alpha_split(a1, a2, b1), identity(q0)}),
                        product({alpha_split(a1, b2 + 1, b1), identity(q1)})});

    auto s5 = relabel(
        "corners", s4.codomain(), cod,
        [a1, b1, a2, b2](const Element& e) {
          int part = tag_of(e);
          const Element& pair = e.value();
          int side = tag_of(pair[0]);
          std::vector<Element> ys{pair[0].value()};
          for (const auto& y : pair[1].value().items()) ys.push_back(y);
          std::vector<Element> ls{side == 0 ? corner(a1, 0) : corner(b1 + 1, 1),
                                  part == 0 ? corner(a2, 0) : corner(b2 + 1, 1)};
          for (const auto& l : pair[1].tag().items()) ls.push_back(l);
          return Element::tagged(Element::tuple(std::move(ys)), Element::tuple(std::move(ls)));
        },
        [](const Element& e) {
          auto ys = items_of(e.value());
          auto ls = items_of(e.tag());
          int side = tag_of(ls[0]);
          int part = tag_of(ls[1]);
          Element rest = Element::tagged(Element::tuple(std::vector<Element>(ys.begin() + 1, ys.end())),
                                         Element::tuple(std::vector<Element>(ls.begin() + 2, ls.end())));
          return Element::tagged(Element::tuple({Element::tagged(ys[0], side), rest}), part);
        });
    return rebind(compose_all({s1, s2, s3, s4, s5}), name, dom, cod);
  });
}

std::vector<Int> gamma_row(const std::vector<Int>& k, Int x, int i) {
  std::vector<Int> row = k;
  row[i - 1] = x + static_cast<Int>(k.size()) - i;
  return row;
}

SignedSet gamma_second_box(const std::vector<Int>& k, Int x, int i) {
  const Int n = static_cast<Int>(k.size());
  std::vector<std::pair<Int, Int>> bounds;
  for (int j = 1; j <= n - 1; ++j) {
    if (j == i)
      bounds.emplace_back(k[i] + 1, x + n - i - 1);
    else if (j == i + 1)
      bounds.emplace_back(k[i], x + n - i - 2);
    else
      bounds.emplace_back(k[j - 1], k[j]);
  }
  return box(bounds);
}

namespace {

SignedSet gamma_first_family(const std::vector<Int>& k, Int x, Int upto) {
  int dim = static_cast<int>(k.size()) - 1;
  return SignedSet::disjoint_union(
      SignedSet::interval(1, upto), "gB" + fmt(k) + ";" + std::to_string(x),
      [k, x](const Element& i) { return chain_box(gamma_row(k, x, static_cast<int>(i.as_int()))); }, dim);
}

SignedSet gamma_second_family(const std::vector<Int>& k, Int x, Int upto) {
  int dim = static_cast<int>(k.size()) - 1;
  return SignedSet::disjoint_union(
      SignedSet::interval(1, std::max<Int>(upto, 0)), "gC" + fmt(k) + ";" + std::to_string(x),
      [k, x](const Element& i) { return gamma_second_box(k, x, static_cast<int>(i.as_int())); }, dim);
}

}  // namespace

SignedSet gamma_codomain(const std::vector<Int>& k, Int x) {
  const Int n = static_cast<Int>(k.size());
  return SignedSet::union_of({gamma_first_family(k, x, n), gamma_second_family(k, x, n - 2)});
}

Sijection gamma_box(const std::vector<Int>& k, Int x) {
  if (k.empty()) throw ConfigurationError("gamma_box: empty row");
  return cache().get(KeyBuilder("gamma_box").add(k).add(x).str(), [&]() -> Sijection {
    const std::string name = "gamma_box(" + fmt(k) + "," + std::to_string(x) + ")";
    const Int n = static_cast<Int>(k.size());
    SignedSet dom = chain_box(k);
    SignedSet cod = gamma_codomain(k, x);
    if (n == 1) {
      return relabel(
          name, dom, cod, [](const Element& e) { return Element::tagged(Element::tagged(e, 1), 0); },
          [](const Element& e) { return e.value().value(); });
    }
    if (n == 2) {
      auto s1 = relabel("unwrap", dom, SignedSet::interval(k[0], k[1]), [](const Element& e) { return e[0]; },
                        [](const Element& e) { return Element::tuple({e}); });
      auto s2 = alpha(k[0], x, k[1]);
      auto s3 = relabel(
          "reindex", s2.codomain(), cod,
          [](const Element& e) {
            Int i = tag_of(e) == 0 ? 2 : 1;
            return Element::tagged(Element::tagged(Element::tuple({e.value()}), i), 0);
          },
          [](const Element& e) {
            Int i = e.value().tag().as_int();
            return Element::tagged(e.value().value()[0], i == 2 ? 0 : 1);
          });
      return rebind(compose_all({s1, s2, s3}), name, dom, cod);
    }

    std::vector<Int> kp(k.begin(), k.end() - 1);
    const Int kn = k[n - 1], kn1 = k[n - 2], kn2 = k[n - 3];
    SignedSet last = SignedSet::interval(kn1, kn);
    SignedSet y1 = SignedSet::product({chain_box(kp), last});
    auto s1 = relabel(
        "split", dom, y1,
        [](const Element& e) {
          auto it = items_of(e);
          Element tail = it.back();
          it.pop_back();
          return Element::tuple({Element::tuple(std::move(it)), tail});
        },
        [](const Element& e) {
          auto it = items_of(e[0]);
          it.push_back(e[1]);
          return Element::tuple(std::move(it));
        });
    Sijection gp = gamma_box(kp, x + 1);
    auto s2 = product({gp, identity(last)});

    SignedSet bfam = gamma_first_family(k, x, n - 2);
    SignedSet cfam = gamma_second_family(k, x, n - 3);
    std::vector<Int> qrow(k.begin(), k.end() - 2);
    qrow.push_back(x + 1);
    std::vector<SignedSet> qf = chain_box(qrow).factors();
    std::vector<SignedSet> qfactors = qf;
    qfactors.push_back(last);
    SignedSet q = SignedSet::product(qfactors);
    SignedSet y3 = SignedSet::union_of({bfam, q, cfam});

    auto append = [](const Element& ys, const Element& z) {
      auto it = items_of(ys);
      it.push_back(z);
      return Element::tuple(std::move(it));
    };
    auto split_last = [](const Element& ys) {
      auto it = items_of(ys);
      Element z = it.back();
      it.pop_back();
      return std::pair{Element::tuple(std::move(it)), z};
    };
    auto s3 = relabel(
        "regroup", s2.codomain(), y3,
        [n, append](const Element& e) {
          const Element& g = e[0];
          const Element& z = e[1];
          int part = tag_of(g);
          const Element& inner = g.value();
          Int i = inner.tag().as_int();
          Element ys = append(inner.value(), z);
          if (part == 1) return Element::tagged(Element::tagged(ys, i), 2);
          if (i == n - 1) return Element::tagged(ys, 1);
          return Element::tagged(Element::tagged(ys, i), 0);
        },
        [n, split_last](const Element& e) {
          int part = tag_of(e);
          if (part == 1) {
            auto [ys, z] = split_last(e.value());
            return Element::tuple({Element::tagged(Element::tagged(ys, n - 1), 0), z});
          }
          auto [ys, z] = split_last(e.value().value());
          Int i = e.value().tag().as_int();
          return Element::tuple({Element::tagged(Element::tagged(ys, i), part == 0 ? 0 : 1), z});
        });

    // Q ⇒ B_n ⊔ C_{n-2} ⊔ B_{n-1} via α on the last factor, then on factor n-2.
    std::vector<Sijection> qa;
    for (std::size_t j = 0; j + 1 < qfactors.size(); ++j) qa.push_back(identity(qfactors[j]));
    qa.push_back(alpha(kn1, x, kn));
    auto q1 = product(qa);
    std::vector<SignedSet> left_f = qf, right_f = qf;
    left_f.push_back(SignedSet::interval(kn1, x));
    right_f.push_back(SignedSet::interval(x + 1, kn));
    SignedSet qa_set = SignedSet::product(left_f);
    SignedSet qb_set = SignedSet::product(right_f);
    auto q2 = relabel(
        "distribute", q1.codomain(), SignedSet::union_of({qa_set, qb_set}),
        [](const Element& e) {
          auto it = items_of(e);
          Element last_e = it.back();
          it.back() = last_e.value();
          return Element::tagged(Element::tuple(std::move(it)), tag_of(last_e));
        },
        [](const Element& e) {
          auto it = items_of(e.value());
          it.back() = Element::tagged(it.back(), tag_of(e));
          return Element::tuple(std::move(it));
        });
    std::vector<Sijection> qc;
    for (std::size_t j = 0; j + 1 < qf.size(); ++j) qc.push_back(identity(qf[j]));
    qc.push_back(alpha(kn2, kn1, x + 1));
    qc.push_back(identity(SignedSet::interval(kn1, x)));
    auto q3 = union_of({product(qc), identity(qb_set)});
    const std::size_t pos = qf.size() - 1;
    SignedSet v = SignedSet::union_of({chain_box(gamma_row(k, x, static_cast<int>(n))),
                                       gamma_second_box(k, x, static_cast<int>(n - 2)),
                                       chain_box(gamma_row(k, x, static_cast<int>(n - 1)))});
    auto q4 = relabel(
        "collect", q3.codomain(), v,
        [pos](const Element& e) {
          if (tag_of(e) == 1) return Element::tagged(e.value(), 2);
          auto it = items_of(e.value());
          int side = tag_of(it[pos]);
          it[pos] = it[pos].value();
          return Element::tagged(Element::tuple(std::move(it)), side);
        },
        [pos](const Element& e) {
          int part = tag_of(e);
          if (part == 2) return Element::tagged(e.value(), 1);
          auto it = items_of(e.value());
          it[pos] = Element::tagged(it[pos], part);
          return Element::tagged(Element::tuple(std::move(it)), 0);
        });
    auto qsij = compose_all({q1, q2, q3, q4});
    auto s4 = union_of({identity(bfam), qsij, identity(cfam)});

    auto s5 = relabel(
        "reassemble", s4.codomain(), cod,
        [n](const Element& e) {
          int part = tag_of(e);
          const Element& inner = e.value();
          const Element& ys = inner.value();
          Int t = inner.tag().as_int();
          if (part == 0) return e;
          if (part == 2) return Element::tagged(Element::tagged(ys, t), 1);
          if (t == 0) return Element::tagged(Element::tagged(ys, n), 0);
          if (t == 1) return Element::tagged(Element::tagged(ys, n - 2), 1);
          return Element::tagged(Element::tagged(ys, n - 1), 0);
        },
        [n](const Element& e) {
          int part = tag_of(e);
          const Element& ys = e.value().value();
          Int i = e.value().tag().as_int();
          if (part == 0) {
            if (i == n) return Element::tagged(Element::tagged(ys, 0), 1);
            if (i == n - 1) return Element::tagged(Element::tagged(ys, 2), 1);
            return e;
          }
          if (i == n - 2) return Element::tagged(Element::tagged(ys, 1), 1);
          return Element::tagged(Element::tagged(ys, i), 2);
        });
    return rebind(compose_all({s1, s2, s3, s4, s5}), name, dom, cod);
  });
}

}  // namespace sij
