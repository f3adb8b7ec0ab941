#include "sij/interval_sijections.hpp"
#include "sij/memo.hpp"
#include "sij/mt_sgt.hpp"

namespace sij {
namespace {

std::string fmt(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string label(const std::string& head, std::initializer_list<std::vector<Int>> parts) {
  std::string s = head;
  for (const auto& p : parts) s += fmt(p);
  return s;
}

MemoTable<SignedSet>& set_cache() {
  static MemoTable<SignedSet> t;
  return t;
}

MemoTable<Sijection>& sij_cache() {
  static MemoTable<Sijection> t;
  return t;
}

std::vector<Int> first(std::vector<Int> v, std::size_t m) {
  v.resize(m);
  return v;
}

// Everything below is for a fixed bottom row k of length n and a fixed x.
struct Ctx {
  std::vector<Int> k;
  Int x;
  int n;

  std::string id() const { return fmt(k) + ";" + std::to_string(x); }

  // a0_j = k_j + δ_↗(μ_j), b0_j = k_{j+1} - δ_↖(μ_{j+1}), j = 1..n-1
  std::vector<Int> a0(const std::vector<Int>& mu) const {
    std::vector<Int> a(n - 1);
    for (int j = 0; j + 1 < n; ++j) a[j] = k[j] + delta_ne(mu[j]);
    return a;
  }
  std::vector<Int> b0(const std::vector<Int>& mu) const {
    std::vector<Int> b(n - 1);
    for (int j = 0; j + 1 < n; ++j) b[j] = k[j + 1] - delta_nw(mu[j + 1]);
    return b;
  }
  // c(T)_1..c(T)_{n-1}, for T ∈ AP_{n-1} or AP_n
  std::vector<Int> c_short(const Element& t, int order) const {
    return first(ap_shifts(order, t.to_ints()), static_cast<std::size_t>(n - 1));
  }

  // Corner row i: i-1 lower corners then upper corners, x appended.
  std::vector<Int> stair_row(const std::vector<Int>& a, const std::vector<Int>& b, const std::vector<Int>& c,
                             int i) const {
    std::vector<Int> r(n);
    for (int j = 1; j <= n - 1; ++j) r[j - 1] = (j < i ? a[j - 1] : b[j - 1] + 1) + c[j - 1];
    r[n - 1] = x;
    return r;
  }
  // Row after moving x to position i.
  std::vector<Int> moved_row(const std::vector<Int>& a, const std::vector<Int>& b, const std::vector<Int>& c,
                             int i) const {
    std::vector<Int> r(n);
    for (int j = 1; j < i; ++j) r[j - 1] = a[j - 1] + c[j - 1];
    r[i - 1] = x + n - i;
    for (int j = i + 1; j <= n; ++j) r[j - 1] = b[j - 2] + c[j - 2];
    return r;
  }
  std::vector<Int> row7(const std::vector<Int>& c, int i) const {
    std::vector<Int> a(k.begin(), k.end() - 1), b(k.begin() + 1, k.end());
    return moved_row(a, b, c, i);
  }

  SignedSet over_mu(const std::string& name, FamilyRule rule) const {
    return SignedSet::disjoint_union(arrow_rows(n), name + id(), std::move(rule));
  }

  // GT(m + c, x) over the corner tuples m.
  SignedSet corner_fibre(const std::vector<Int>& a, const std::vector<Int>& b, const std::vector<Int>& c) const {
    return corner_fibre_over(corner_index(a, b), c);
  }
  SignedSet corner_fibre_over(const SignedSet& index, const std::vector<Int>& c) const {
    Int xx = x;
    return SignedSet::disjoint_union(index, "GTc" + fmt(c) + ";" + std::to_string(x), [c, xx](const Element& m) {
      auto r = corner_values(m);
      for (std::size_t j = 0; j < r.size(); ++j) r[j] += c[j];
      r.push_back(xx);
      return gt_set(r);
    });
  }
};

bool has_drop(const Element& m, std::size_t j) {
  return m[j].tag().as_int() == 1 && m[j + 1].tag().as_int() == 0;
}

// Smallest 1-based i with corner sides (1,0) at (i,i+1), or 0.
int first_drop(const Element& m) {
  for (std::size_t j = 0; j + 1 < m.arity(); ++j)
    if (has_drop(m, j)) return static_cast<int>(j) + 1;
  return 0;
}

SignedSet drop_corners(const std::vector<Int>& a, const std::vector<Int>& b) {
  return set_cache().get(label("drops", {a, b}), [&] {
    SignedSet all = corner_index(a, b);
    FamilySpec spec;
    spec.key = label("drops", {a, b});
    spec.enumerate = [all](const Visitor& visit) {
      all.for_each([&](const Element& m, int s) {
        if (first_drop(m)) visit(m, s);
      });
    };
    spec.sign_of = [all](const Element& m) -> std::optional<int> {
      auto s = all.sign_of(m);
      if (!s || !first_drop(m)) return std::nullopt;
      return s;
    };
    return SignedSet::family(std::move(spec));
  });
}

// (-1)^{n-i} GT(stair) ⇒ GT(moved) by π at positions n-1, n-2, …, i.
Sijection pi_chain(const std::vector<Int>& start, int i) {
  const int n = static_cast<int>(start.size());
  return sij_cache().get(KeyBuilder("pichain").add(start).add(i).str(), [&] {
    SignedSet dom = (n - i) % 2 ? SignedSet::opposite(gt_set(start)) : gt_set(start);
    if (i == n) return identity(dom);
    std::vector<Sijection> chain;
    std::vector<Int> r = start;
    bool negative = (n - i) % 2;
    for (int j = n - 1; j >= i; --j) {
      Sijection p = pi(r, j);
      chain.push_back(negative ? negate(p) : p);
      negative = !negative;
      r = pi_row(r, j);
    }
    return compose_all(chain);
  });
}

std::vector<Int> shifted(std::vector<Int> v, const std::vector<Int>& c, int sign) {
  for (std::size_t j = 0; j < v.size(); ++j) v[j] += sign * c[j];
  return v;
}

Sijection build_phi(const Ctx& cx) {
  const int n = cx.n;
  const std::string id = cx.id();
  const SignedSet ap = arrow_patterns(n);
  const SignedSet ap_prev = arrow_patterns(n - 1);
  auto mu_of = [](const Element& t) { return t.to_ints(); };

  // Φ1: switch l and T, shift l by c(T), ρ, shift corners back.
  SignedSet l0 = phi_domain(cx.k);
  SignedSet l2 = cx.over_mu("PhiA", [cx, ap_prev, mu_of](const Element& mu) {
    auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
    return SignedSet::disjoint_union(ap_prev, label("PhiA", {a, b}), [cx, a, b](const Element& t) {
      auto c = cx.c_short(t, cx.n - 1);
      std::vector<std::pair<Int, Int>> bounds;
      for (std::size_t j = 0; j < a.size(); ++j) bounds.emplace_back(a[j] + c[j], b[j] + c[j]);
      return gt_union(box(bounds));
    });
  });
  auto s_a = relabel(
      "Phi1.switch", l0, l2,
      [cx](const Element& e) {
        const Element& atl = e.value();
        const Element& t = atl.value().tag();
        auto l = shifted(atl.tag().to_ints(), cx.c_short(t, cx.n - 1), 1);
        return Element::tagged(Element::tagged(Element::tagged(atl.value().value(), Element::ints(l)), t), e.tag());
      },
      [cx](const Element& e) {
        const Element& alt = e.value();
        const Element& t = alt.tag();
        auto l = shifted(alt.value().tag().to_ints(), cx.c_short(t, cx.n - 1), -1);
        return Element::tagged(Element::tagged(Element::tagged(alt.value().value(), t), Element::ints(l)), e.tag());
      });

  SignedSet l3 = cx.over_mu("PhiB", [cx, ap_prev, mu_of](const Element& mu) {
    auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
    return SignedSet::disjoint_union(ap_prev, label("PhiB", {a, b}) + ";" + std::to_string(cx.x),
                                     [cx, a, b](const Element& t) {
                                       auto c = cx.c_short(t, cx.n - 1);
                                       return rho_codomain(shifted(a, c, 1), shifted(b, c, 1), cx.x);
                                     });
  });
  auto s_b = union_map("Phi1.rho", l2, l3, [cx, l2, l3, mu_of](const Element& mu) {
    return sij_cache().get("Phi1.rho" + cx.id() + mu.str(), [&] {
      auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
      return union_map("rho", l2.fibre(mu), l3.fibre(mu), [cx, a, b](const Element& t) {
        auto c = cx.c_short(t, cx.n - 1);
        return rho(shifted(a, c, 1), shifted(b, c, 1), cx.x);
      });
    });
  });

  SignedSet l4 = cx.over_mu("PhiC", [cx, ap_prev, mu_of](const Element& mu) {
    auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
    return SignedSet::disjoint_union(ap_prev, label("PhiC", {a, b}) + ";" + std::to_string(cx.x),
                                     [cx, a, b](const Element& t) { return cx.corner_fibre(a, b, cx.c_short(t, cx.n - 1)); });
  });
  auto move_corners = [cx](const Element& e, int sign) {
    const Element& amt = e.value();
    const Element& t = amt.tag();
    auto c = cx.c_short(t, cx.n - 1);
    const Element& m = amt.value().tag();
    std::vector<Element> items;
    for (std::size_t j = 0; j < m.arity(); ++j)
      items.push_back(Element::tagged(Element::integer(m[j].value().as_int() + sign * c[j]), m[j].tag()));
    return Element::tagged(
        Element::tagged(Element::tagged(amt.value().value(), Element::tuple(std::move(items))), t), e.tag());
  };
  auto s_c = relabel(
      "Phi1.unshift", l3, l4, [move_corners](const Element& e) { return move_corners(e, -1); },
      [move_corners](const Element& e) { return move_corners(e, 1); });

  // Φ2: raise the order of the arrow patterns with Ψ_{n,n}.
  SignedSet l5 = cx.over_mu("PhiD", [cx, ap, mu_of](const Element& mu) {
    auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
    return SignedSet::disjoint_union(ap, label("PhiD", {a, b}) + ";" + std::to_string(cx.x),
                                     [cx, a, b](const Element& t) { return cx.corner_fibre(a, b, cx.c_short(t, cx.n)); });
  });
  Sijection psi_nn = Psi(n, n);
  auto s_d = union_map("Phi2", l4, l5, [cx, l4, l5, psi_nn](const Element& mu) {
    return sij_cache().get("Phi2" + cx.id() + mu.str(),
                           [&] { return disjoint_union("Phi2.lift", psi_nn, l4.fibre(mu), l5.fibre(mu)); });
  });

  // Φ3: cancel corner tuples with a (1,0) drop, move x to its slot in the rest.
  SignedSet surv = cx.over_mu("Surv", [cx, ap, mu_of](const Element& mu) {
    auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
    return SignedSet::disjoint_union(ap, label("Surv", {a, b}) + ";" + std::to_string(cx.x), [cx, a, b](const Element& t) {
      auto c = cx.c_short(t, cx.n);
      return SignedSet::disjoint_union(SignedSet::interval(1, cx.n), label("Stair", {a, b, c}) + ";" + std::to_string(cx.x),
                                       [cx, a, b, c](const Element& i) {
                                         int ii = static_cast<int>(i.as_int());
                                         SignedSet g = gt_set(cx.stair_row(a, b, c, ii));
                                         return (cx.n - ii) % 2 ? SignedSet::opposite(g) : g;
                                       });
    });
  });
  SignedSet bad = cx.over_mu("Bad", [cx, ap, mu_of](const Element& mu) {
    auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
    return SignedSet::disjoint_union(ap, label("Bad", {a, b}) + ";" + std::to_string(cx.x), [cx, a, b](const Element& t) {
      return cx.corner_fibre_over(drop_corners(a, b), cx.c_short(t, cx.n));
    });
  });
  SignedSet split = SignedSet::union_of({surv, bad});
  auto s_e1 = relabel(
      "Phi3.split", l5, split,
      [](const Element& e) {
        const Element& m = e.value().value().tag();
        if (first_drop(m)) return Element::tagged(e, 1);
        // i-1 lower corners followed by upper corners
        Int i = 1;
        while (i <= static_cast<Int>(m.arity()) && m[i - 1].tag().as_int() == 0) ++i;
        const Element& amt = e.value();
        return Element::tagged(
            Element::tagged(Element::tagged(Element::tagged(amt.value().value(), i), amt.tag()), e.tag()), 0);
      },
      [cx](const Element& e) {
        if (e.tag().as_int() == 1) return e.value();
        const Element& ait = e.value().value();
        auto mu = e.value().tag().to_ints();
        auto a = cx.a0(mu), b = cx.b0(mu);
        int i = static_cast<int>(ait.value().tag().as_int());
        std::vector<Element> m;
        for (int j = 1; j <= cx.n - 1; ++j)
          m.push_back(j < i ? Element::tagged(Element::integer(a[j - 1]), 0) : Element::tagged(Element::integer(b[j - 1] + 1), 1));
        return Element::tagged(
            Element::tagged(Element::tagged(ait.value().value(), Element::tuple(std::move(m))), ait.tag()),
            e.value().tag());
      });

  SignedSet l6 = cx.over_mu("Row6", [cx, ap, mu_of](const Element& mu) {
    auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
    return SignedSet::disjoint_union(ap, label("Row6", {a, b}) + ";" + std::to_string(cx.x), [cx, a, b](const Element& t) {
      auto c = cx.c_short(t, cx.n);
      return SignedSet::disjoint_union(SignedSet::interval(1, cx.n), label("Row6", {a, b, c}) + ";" + std::to_string(cx.x),
                                       [cx, a, b, c](const Element& i) {
                                         return gt_set(cx.moved_row(a, b, c, static_cast<int>(i.as_int())));
                                       });
    });
  });
  auto chains = union_map("Phi3.move", surv, l6, [cx, surv, l6, mu_of](const Element& mu) {
    return sij_cache().get("Phi3.move" + cx.id() + mu.str(), [&] {
      auto a = cx.a0(mu_of(mu)), b = cx.b0(mu_of(mu));
      SignedSet from = surv.fibre(mu), to = l6.fibre(mu);
      return union_map("move", from, to, [cx, a, b, from, to](const Element& t) {
        auto c = cx.c_short(t, cx.n);
        return union_map("move", from.fibre(t), to.fibre(t), [cx, a, b, c](const Element& i) {
          int ii = static_cast<int>(i.as_int());
          return pi_chain(cx.stair_row(a, b, c, ii), ii);
        });
      });
    });
  });
  auto cancel = involution_to_empty("Phi3.cancel", bad, [cx](const Element& e) {
    const int n = cx.n;
    const Element& amt = e.value();
    const Element& am = amt.value();
    const Element& m = am.tag();
    auto t = amt.tag().to_ints();
    auto mu = e.tag().to_ints();
    const int i = first_drop(m);
    auto r = corner_values(m);
    auto c = ap_shifts(n, t);
    for (int j = 0; j + 1 < n; ++j) r[j] += c[j];
    r.push_back(cx.x);
    SidedElement q = pi_swap(r, i, am.value());
    if (q.side == Side::Domain)
      return Element::tagged(Element::tagged(Element::tagged(q.element, m), amt.tag()), e.tag());
    std::vector<Int> t2 = t;
    for (int j = i + 2; j <= n; ++j) std::swap(t2[ap_index(n, i, j)], t2[ap_index(n, i + 1, j)]);
    for (int j = 1; j < i; ++j) std::swap(t2[ap_index(n, j, i)], t2[ap_index(n, j, i + 1)]);
    t2[ap_index(n, i, i + 1)] = eta(mu[i]);
    std::vector<Int> mu2 = mu;
    mu2[i] = eta(t[ap_index(n, i, i + 1)]);
    std::vector<Element> m2(m.items().begin(), m.items().end());
    m2[i - 1] = Element::tagged(Element::integer(cx.k[i] - delta_nw(mu2[i]) + 1), 1);
    m2[i] = Element::tagged(Element::integer(cx.k[i] + delta_ne(mu2[i])), 0);
    return Element::tagged(
        Element::tagged(Element::tagged(q.element, Element::tuple(std::move(m2))), Element::ints(t2)),
        Element::ints(mu2));
  });
  auto s_e2 = union_of({chains, cancel});
  auto s_e3 = relabel(
      "Phi3.drop", s_e2.codomain(), l6, [](const Element& e) { return e.value(); },
      [](const Element& e) { return Element::tagged(e, 0); });

  // Φ4: collapse the arrow row with Λ, re-index with Ψ_{n,i} ∘ Ψ_{n,n}^{-1}, τ^{-1}.
  SignedSet l7 = SignedSet::disjoint_union(ap, "Row6T" + id, [cx](const Element& t) {
    auto c = cx.c_short(t, cx.n);
    return SignedSet::disjoint_union(SignedSet::interval(1, cx.n), "Row6Ti" + cx.id() + fmt(c), [cx, c](const Element& i) {
      int ii = static_cast<int>(i.as_int());
      return SignedSet::disjoint_union(arrow_rows(cx.n), "Row6mu" + cx.id() + fmt(c) + std::to_string(ii),
                                       [cx, c, ii](const Element& mu) {
                                         auto m = mu.to_ints();
                                         return gt_set(cx.moved_row(cx.a0(m), cx.b0(m), c, ii));
                                       });
    });
  });
  auto s_f = relabel(
      "Phi4.switch", l6, l7,
      [](const Element& e) {
        const Element& ait = e.value().value();
        return Element::tagged(Element::tagged(Element::tagged(ait.value(), e.tag()), ait.tag()), e.value().tag());
      },
      [](const Element& e) {
        const Element& ami = e.value();
        return Element::tagged(Element::tagged(Element::tagged(ami.value().value(), ami.tag()), e.tag()),
                               ami.value().tag());
      });

  SignedSet l8 = SignedSet::disjoint_union(ap, "Row7T" + id, [cx](const Element& t) {
    auto c = cx.c_short(t, cx.n);
    return SignedSet::disjoint_union(SignedSet::interval(1, cx.n), "Row7Ti" + cx.id() + fmt(c), [cx, c](const Element& i) {
      return gt_set(cx.row7(c, static_cast<int>(i.as_int())));
    });
  });
  auto s_g = union_map("Phi4.lambda", l7, l8, [cx, l7, l8](const Element& t) {
    return sij_cache().get("Phi4.lambda" + cx.id() + t.str(), [&] {
      SignedSet from = l7.fibre(t), to = l8.fibre(t);
      auto c = cx.c_short(t, cx.n);
      return union_map("lambda", from, to, [cx, c, from](const Element& i) {
        int ii = static_cast<int>(i.as_int());
        auto target = gt_set(cx.row7(c, ii));
        auto one = SignedSet::disjoint_union(SignedSet::singleton(Element::dot(), 1),
                                             "Row7" + cx.id() + fmt(c) + std::to_string(ii),
                                             [target](const Element&) { return target; });
        auto lift = disjoint_union("lambda.lift", Lambda(cx.n, ii), from.fibre(i), one);
        auto drop = relabel(
            "lambda.drop", one, target, [](const Element& e) { return e.value(); },
            [](const Element& e) { return Element::tagged(e, Element::dot()); });
        return compose(lift, drop);
      });
    });
  });

  SignedSet l9 = SignedSet::disjoint_union(SignedSet::interval(1, n), "Row7I" + id, [cx, ap](const Element& i) {
    int ii = static_cast<int>(i.as_int());
    return SignedSet::disjoint_union(ap, "Row7IT" + cx.id() + std::to_string(ii), [cx, ii](const Element& t) {
      return gt_set(cx.row7(cx.c_short(t, cx.n), ii));
    });
  });
  auto swap_it = [](const Element& e) {
    return Element::tagged(Element::tagged(e.value().value(), e.tag()), e.value().tag());
  };
  auto s_h = relabel("Phi4.switch", l8, l9, swap_it, swap_it);

  SignedSet l10 = SignedSet::disjoint_union(SignedSet::interval(1, n), "Row9I" + id, [cx, ap](const Element& i) {
    int ii = static_cast<int>(i.as_int());
    return SignedSet::disjoint_union(ap, "Row9IT" + cx.id() + std::to_string(ii), [cx, ii](const Element& t) {
      return gt_set(gamma_row(deform_d(cx.k, t.to_ints()), cx.x, ii));
    });
  });
  auto s_i = union_map("Phi4.psi", l9, l10, [cx, l9, l10](const Element& i) {
    return sij_cache().get("Phi4.psi" + cx.id() + i.str(), [&] {
      int ii = static_cast<int>(i.as_int());
      auto psi = compose(inverse(Psi(cx.n, cx.n)), Psi(cx.n, ii));
      return disjoint_union("Phi4.psi.lift", psi, l9.fibre(i), l10.fibre(i));
    });
  });

  SignedSet l11 = SignedSet::disjoint_union(ap, "TauT" + id, [cx](const Element& t) {
    return tau_codomain(deform_d(cx.k, t.to_ints()), cx.x);
  });
  auto s_j = relabel("Phi4.switch", l10, l11, swap_it, swap_it);
  auto s_k = union_map("Phi4.tau", l11, sgt_set(cx.k),
                       [cx](const Element& t) { return inverse(tau(deform_d(cx.k, t.to_ints()), cx.x)); });

  return compose_all({s_a, s_b, s_c, s_d, s_e1, s_e2, s_e3, s_f, s_g, s_h, s_i, s_j, s_k});
}

}  // namespace

Sijection Phi(const std::vector<Int>& k, Int x) {
  if (k.empty()) throw ConfigurationError("Phi needs a non-empty bottom row");
  return sij_cache().get(KeyBuilder("Phi").add(k).add(x).str(), [&] {
    Ctx cx{k, x, static_cast<int>(k.size())};
    Sijection s = build_phi(cx);
    return rebind(s, "Phi" + cx.id(), s.domain(), s.codomain());
  });
}

Sijection Gamma(const std::vector<Int>& k, Int x) {
  if (k.empty()) throw ConfigurationError("Gamma needs a non-empty bottom row");
  return sij_cache().get(KeyBuilder("Gamma").add(k).add(x).str(), [&]() -> Sijection {
    const std::string name = "Gamma" + fmt(k) + ";" + std::to_string(x);
    if (k.size() == 1) {
      Element row = Element::tuple({Element::ints(k)});
      return relabel(
          name, mt_set(k), sgt_set(k), [](const Element&) { return Element::tagged(Element::dot(), Element::dot()); },
          [row](const Element&) { return row; });
    }
    SignedSet from = xi_codomain(k), to = phi_domain(k);
    auto lift = union_map("Gamma.lift", from, to, [k, x, from, to](const Element& mu) {
      return sij_cache().get("Gamma.lift" + fmt(k) + ";" + std::to_string(x) + mu.str(), [&] {
        return union_map("Gamma.lift", from.fibre(mu), to.fibre(mu),
                         [x](const Element& l) { return Gamma(l.to_ints(), x); });
      });
    });
    Sijection s = compose_all({Xi(k), lift, Phi(k, x)});
    return rebind(s, name, s.domain(), s.codomain());
  });
}

}  // namespace sij
