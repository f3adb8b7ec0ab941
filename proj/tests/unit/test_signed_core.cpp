#include <doctest.h>

#include <algorithm>
#include <map>

#include "sij/signed_set.hpp"

using namespace sij;

namespace {

// Sum of signs over an explicit enumeration.
Count enumerated_size(const SignedSet& s) {
  Count total = 0;
  s.for_each([&](const Element&, int sign) { total += sign; });
  return total;
}

// Signed indicator of [a,b] at x: 1_{x>=a} - 1_{x>b}.
int indicator(Int a, Int b, Int x) { return (x >= a ? 1 : 0) - (x > b ? 1 : 0); }

}  // namespace

TEST_CASE("element equality, hashing and json round trip") {
  Element a = Element::tagged(Element::ints(std::vector<Int>{1, 2}), 0);
  Element b = Element::tagged(Element::ints(std::vector<Int>{1, 2}), 0);
  Element c = Element::tagged(Element::ints(std::vector<Int>{1, 2}), 1);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a != c);
  CHECK(Element() == Element::tuple({}));
  CHECK(Element().hash() == Element::tuple({}).hash());
  CHECK(Element::from_json(a.to_json()) == a);
  CHECK(a.to_json().dump() == R"({"t":0,"v":[1,2]})");
  CHECK_THROWS(Element::from_json(nlohmann::json::parse(R"({"x":1})")));
  CHECK_THROWS(Element::integer(3).items());
}

TEST_CASE("signed intervals") {
  auto s = SignedSet::interval(1, 3);
  CHECK(s.size() == 3);
  auto neg = SignedSet::interval(9, 5);
  auto els = neg.elements();
  REQUIRE(els.size() == 3);
  CHECK(els[0].first == Element::integer(6));
  CHECK(els[2].first == Element::integer(8));
  CHECK(std::all_of(els.begin(), els.end(), [](auto& p) { return p.second == -1; }));
  CHECK(neg.size() == -3);
  CHECK(SignedSet::interval(2, 1).elements().empty());
  auto one = SignedSet::interval(3, 1).elements();
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == Element::integer(2));
  CHECK(one[0].second == -1);
}

TEST_CASE("interval size and membership match the signed indicator") {
  for (Int a = -6; a <= 6; ++a)
    for (Int b = -6; b <= 6; ++b) {
      auto s = SignedSet::interval(a, b);
      CHECK(s.size() == b - a + 1);
      CHECK(enumerated_size(s) == b - a + 1);
      for (Int x = -8; x <= 8; ++x) {
        auto sg = s.sign_of(Element::integer(x));
        CHECK((sg ? *sg : 0) == indicator(a, b, x));
      }
      // [b+1, a-1] is the opposite of [a,b].
      auto flipped = SignedSet::interval(b + 1, a - 1).elements();
      auto opp = SignedSet::opposite(s).elements();
      CHECK(flipped == opp);
    }
}

TEST_CASE("products") {
  auto p = SignedSet::product({SignedSet::interval(1, 2), SignedSet::interval(4, 3)});
  CHECK(p.elements().empty());
  auto q = SignedSet::product({SignedSet::interval(1, 2), SignedSet::interval(5, 3)});
  auto els = q.elements();
  REQUIRE(els.size() == 2);
  CHECK(els[0].second == -1);
  CHECK(els[1].second == -1);
  CHECK(els[0].first == Element::ints(std::vector<Int>{1, 4}));
  CHECK(q.size() == -2);
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c) {
        auto r = box({{a, b}, {b, c}, {c, a}});
        CHECK(r.size() == enumerated_size(r));
        CHECK(r.size() == (b - a + 1) * (c - b + 1) * (a - c + 1));
        auto cnt = r.counts();
        CHECK((cnt.pos == 0 || cnt.neg == 0));
      }
  auto unit = SignedSet::product({});
  REQUIRE(unit.elements().size() == 1);
  CHECK(unit.elements()[0].first == Element::dot());
}

TEST_CASE("opposite is an involution") {
  auto s = box({{1, 2}, {4, 2}});
  auto twice = SignedSet::opposite(SignedSet::opposite(s));
  CHECK(twice.elements() == s.elements());
  CHECK(SignedSet::opposite(SignedSet::interval(1, 5)).size() == -5);
}

TEST_CASE("disjoint unions") {
  auto constant = SignedSet::disjoint_union(SignedSet::interval(6, 4), "const12",
                                            [](const Element&) { return SignedSet::interval(1, 2); });
  CHECK(constant.size() == enumerated_size(constant));
  CHECK(constant.size() == -2);

  auto ranged = SignedSet::disjoint_union(SignedSet::interval(2, 0), "upto",
                                          [](const Element& t) { return SignedSet::interval(1, t.as_int()); });
  CHECK(ranged.size() == enumerated_size(ranged));
  CHECK(ranged.size() == -1);

  auto none = SignedSet::disjoint_union(SignedSet::empty(), "any",
                                        [](const Element&) { return SignedSet::interval(1, 9); });
  CHECK(none.elements().empty());

  auto s0 = SignedSet::interval(1, 2);
  auto s1 = SignedSet::interval(5, 4);
  auto u = SignedSet::union_of({s0, SignedSet::interval(3, 4)});
  auto els = u.elements();
  REQUIRE(els.size() == 4);
  CHECK(els[0].first == Element::tagged(Element::integer(1), 0));
  CHECK(els[3].first == Element::tagged(Element::integer(4), 1));
  CHECK(SignedSet::union_of({s0, s1}).size() == 2);

  // Sizes over a sweep of index sets with up to 20 elements.
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 16; b += 3) {
      auto d = SignedSet::disjoint_union(SignedSet::interval(a, b), "shift",
                                         [](const Element& t) { return SignedSet::interval(t.as_int(), 2); });
      CHECK(d.size() == enumerated_size(d));
      Count expect = 0;
      SignedSet::interval(a, b).for_each([&](const Element& t, int st) { expect += st * (2 - t.as_int() + 1); });
      CHECK(d.size() == expect);
    }
}

TEST_CASE("distributivity as a retagging") {
  auto s = SignedSet::interval(1, 3), t = SignedSet::interval(5, 3), u = SignedSet::interval(0, 1);
  auto lhs = SignedSet::product({SignedSet::union_of({s, t}), u});
  auto rhs = SignedSet::union_of({SignedSet::product({s, u}), SignedSet::product({t, u})});
  std::map<std::string, int> a, b;
  lhs.for_each([&](const Element& e, int sg) {
    Element re = Element::tagged(Element::tuple({e[0].value(), e[1]}), e[0].tag());
    a[re.str()] = sg;
  });
  rhs.for_each([&](const Element& e, int sg) { b[e.str()] = sg; });
  CHECK(a == b);
}

TEST_CASE("projection xi") {
  auto i = SignedSet::interval(1, 5);
  CHECK(i.xi(Element::integer(4)) == std::vector<Int>{4});
  auto inner = SignedSet::union_of({SignedSet::interval(1, 5), SignedSet::interval(6, 3)});
  auto outer = SignedSet::union_of({SignedSet::interval(1, 3), inner});
  Element e = Element::tagged(Element::tagged(Element::integer(4), 1), 1);
  CHECK(outer.sign_of(e) == -1);
  CHECK(outer.xi(e) == std::vector<Int>{4});
  auto p = box({{0, 3}, {5, 9}});
  CHECK(p.xi(Element::ints(std::vector<Int>{2, 7})) == std::vector<Int>{2, 7});
  CHECK(p.dimension() == 2);
  auto fam = SignedSet::family({"f", [](const Visitor& v) { v(Element::integer(0), 1); },
                                [](const Element&) { return std::optional<int>(1); }, {}});
  CHECK_THROWS(fam.xi(Element::integer(0)));
}
