#include <doctest.h>

#include "sij/interval_sijections.hpp"
#include "sij/sijection.hpp"

using namespace sij;

TEST_CASE("identity") {
  auto id = identity(SignedSet::interval(1, 2));
  auto rep = verify(id);
  CHECK(rep.ok);
  CHECK(rep.pair_count == 2);
  CHECK(verify(identity(SignedSet::empty())).ok);
  CHECK(is_normal(identity(SignedSet::interval(-3, 2))));
  CHECK(is_normal(identity(SignedSet::interval(4, 2))));
}

TEST_CASE("inverse") {
  auto s = box({{1, 3}, {2, 0}});
  auto id = identity(s);
  auto inv = inverse(id);
  s.for_each([&](const Element& e, int) {
    CHECK(inv.forward(e) == id.forward(e));
    CHECK(inv.backward(e) == id.backward(e));
  });
  auto a = alpha(1, 5, 3);
  auto ai = inverse(a);
  CHECK(ai.domain().key() == a.codomain().key());
  CHECK(verify(ai).ok);
  auto aii = inverse(ai);
  a.domain().for_each([&](const Element& e, int) { CHECK(aii.forward(e) == a.forward(e)); });
}

TEST_CASE("composition") {
  auto s = SignedSet::interval(-2, 3);
  auto c = compose(identity(s), identity(s));
  s.for_each([&](const Element& e, int) { CHECK(c.forward(e) == SidedElement{Side::Codomain, e}); });

  auto a = alpha(1, 5, 3);
  auto round = compose(a, inverse(a));
  a.domain().for_each([&](const Element& e, int) { CHECK(round.forward(e) == SidedElement{Side::Codomain, e}); });
  CHECK(verify(round).ok);

  CHECK_THROWS_AS(compose(alpha(1, 2, 3), alpha(1, 2, 3)), ConfigurationError);

  // Associativity on chains of alphas: [a,d] ⇒ [a,b] ⊔ [b+1,d] ⇒ ...
  for (Int a0 = -2; a0 <= 2; ++a0)
    for (Int b0 = -2; b0 <= 2; ++b0)
      for (Int d0 = -2; d0 <= 2; ++d0) {
        auto f = alpha(a0, b0, d0);
        auto g = union_of({identity(SignedSet::interval(a0, b0)), alpha(b0 + 1, 0, d0)});
        auto h = identity(g.codomain());
        auto left = compose(compose(f, g), h);
        auto right = compose(f, compose(g, h));
        CHECK(verify(left).ok);
        f.domain().for_each([&](const Element& e, int) { CHECK(left.forward(e) == right.forward(e)); });
        h.codomain().for_each([&](const Element& e, int) { CHECK(left.backward(e) == right.backward(e)); });
      }
}

TEST_CASE("products of sijections") {
  auto s = box({{1, 2}, {3, 1}});
  auto p = product({identity(SignedSet::interval(1, 2)), identity(SignedSet::interval(3, 1))});
  s.for_each([&](const Element& e, int) { CHECK(p.forward(e) == SidedElement{Side::Codomain, e}); });
  auto q = product({alpha(1, 2, 3), alpha(0, 0, 1)});
  auto rep = verify(q);
  CHECK(rep.ok);
  CHECK(rep.domain.pos == 6);
  for (Int a = -1; a <= 2; ++a)
    for (Int b = -1; b <= 2; ++b)
      for (Int c = -1; c <= 2; ++c) CHECK(verify(product({alpha(a, b, c), alpha(c, a, b), to_empty(a, b)})).ok);
}

TEST_CASE("disjoint union of sijections") {
  // ψ = id with arbitrary fibres reduces to a tagwise union.
  auto index = SignedSet::interval(0, 3);
  auto from = SignedSet::disjoint_union(index, "A", [](const Element& t) {
    Int v = t.as_int();
    return SignedSet::interval(v - 2, 1);
  });
  auto to = SignedSet::disjoint_union(index, "Asplit", [](const Element& t) {
    Int v = t.as_int();
    return alpha(v - 2, v - 3, 1).codomain();
  });
  auto phi = union_map("fibred", from, to, [](const Element& t) {
    Int v = t.as_int();
    return alpha(v - 2, v - 3, 1);
  });
  CHECK(verify(phi).ok);
  auto viaprop = disjoint_union("prop", identity(index), from, to, [](const SidedElement& t) {
    Int v = t.element.as_int();
    return t.side == Side::Domain ? alpha(v - 2, v - 3, 1) : inverse(alpha(v - 2, v - 3, 1));
  });
  CHECK(verify(viaprop).ok);
  from.for_each([&](const Element& e, int) { CHECK(viaprop.forward(e) == phi.forward(e)); });

  // Non-trivial ψ with identity fibres over a normal index sijection.
  auto psi = alpha(-1, 2, 4);
  auto fam = [](const Element& t) {
    Int v = t.is_int() ? t.as_int() : t.value().as_int();
    return SignedSet::interval(0, v);
  };
  auto dom = SignedSet::disjoint_union(psi.domain(), "upto0", fam);
  auto cod = SignedSet::disjoint_union(psi.codomain(), "upto0", fam);
  auto lifted = disjoint_union("lift", psi, dom, cod);
  CHECK(verify(lifted).ok);

  auto e = SignedSet::empty();
  auto vac = disjoint_union("vac", identity(e), SignedSet::disjoint_union(e, "x", fam),
                            SignedSet::disjoint_union(e, "x", fam));
  CHECK(verify(vac).ok);
}

TEST_CASE("verification catches corrupted maps") {
  auto a = alpha(1, 8, 5);
  auto broken = Sijection("broken", a.domain(), a.codomain(), [f = a.fn()](const SidedElement& x) {
    if (x.side == Side::Domain && x.element == Element::integer(2)) return SidedElement{Side::Domain, x.element};
    return (*f)(x);
  });
  auto rep = verify(broken);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.size() <= 10);
  CHECK(rep.to_json()["ok"] == false);

  auto outside = Sijection("outside", a.domain(), a.codomain(), [](const SidedElement& x) {
    return SidedElement{other(x.side), Element::integer(100)};
  });
  auto rep2 = verify(outside, {2, 3});
  CHECK_FALSE(rep2.ok);
  CHECK(rep2.failures.size() == 3);
  CHECK(rep2.failures[0].kind == "not_member");
}

TEST_CASE("verification is independent of the number of jobs") {
  auto g = gamma_box({0, 3, 1, 4}, 1);
  auto r1 = verify(g, {1, 10});
  auto r4 = verify(g, {4, 10});
  CHECK(r1.ok);
  CHECK(r1.to_json() == r4.to_json());
}

TEST_CASE("maps into the empty set are sign-reversing involutions") {
  auto t = to_empty(-1, 2);
  auto rep = verify(t);
  CHECK(rep.ok);
  CHECK(rep.domain.pos == rep.domain.neg);
  CHECK(rep.crossing_pairs == 0);
}

TEST_CASE("normality inside verify") {
  auto a = alpha(1, 5, 3);
  auto rep = verify(a, {.check_normal = true});
  CHECK(rep.ok);
  REQUIRE(rep.normal.has_value());
  CHECK(*rep.normal);
  CHECK(rep.to_json()["normal"] == true);
  CHECK_FALSE(verify(a).normal.has_value());

  Sijection shift("shift", SignedSet::interval(1, 2), SignedSet::interval(3, 4), [](const SidedElement& x) {
    Int v = x.element.as_int();
    return x.side == Side::Domain ? SidedElement{Side::Codomain, Element::integer(v + 2)}
                                  : SidedElement{Side::Domain, Element::integer(v - 2)};
  });
  CHECK(verify(shift).ok);
  CHECK_FALSE(is_normal(shift));
  auto bad = verify(shift, {.check_normal = true});
  CHECK_FALSE(bad.ok);
  CHECK(bad.normal == false);
  CHECK(bad.failures.front().kind == "not_normal");
}
