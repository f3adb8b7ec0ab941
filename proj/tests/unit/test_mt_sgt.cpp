#include <doctest.h>

#include <functional>
#include <set>

#include "sij/mt_sgt.hpp"

using namespace sij;

namespace {

void sweep(int n, Int lo, Int hi, const std::function<void(const std::vector<Int>&)>& f) {
  std::vector<Int> k(n, lo);
  while (true) {
    f(k);
    int j = 0;
    while (j < n && k[j] == hi) k[j++] = lo;
    if (j == n) break;
    ++k[j];
  }
}

// Every triangle with entries between min(k) and max(k), checked row by row.
SignedCounts brute_mt(const std::vector<Int>& k) {
  SignedCounts acc;
  Int lo = *std::min_element(k.begin(), k.end());
  Int hi = *std::max_element(k.begin(), k.end());
  std::function<void(Rows&)> grow = [&](Rows& rows) {
    const std::vector<Int> below = rows.front();
    if (below.size() == 1) {
      acc.add({1, 0}, mt_sign(rows));
      return;
    }
    std::vector<Int> l(below.size() - 1, lo);
    while (true) {
      if (interlaces(l, below)) {
        rows.insert(rows.begin(), l);
        grow(rows);
        rows.erase(rows.begin());
      }
      std::size_t j = 0;
      while (j < l.size() && l[j] == hi) l[j++] = lo;
      if (j == l.size()) break;
      ++l[j];
    }
  };
  Rows rows{k};
  grow(rows);
  return acc;
}

std::vector<Int> pattern(int n, std::initializer_list<const char*> top_down) {
  auto j = nlohmann::json::array();
  for (const char* s : top_down) j.push_back(s);
  return pattern_from_json(n, j);
}

}  // namespace

TEST_CASE("interlacing") {
  CHECK(interlaces({1, 2}, {1, 2, 3}));
  CHECK_FALSE(interlaces({2, 2}, {1, 2, 3}));
  CHECK(interlaces({3, 3, 4, 5}, {5, 3, 1, 4, 6}));
  CHECK_FALSE(interlaces({2}, {5, 2}));
  CHECK(interlaces({}, {4}));
  CHECK_FALSE(interlaces({1}, {1, 2, 3}));
}

TEST_CASE("monotone triangles") {
  auto c = mt_set({1, 2, 3}).counts();
  CHECK(c.pos == 7);
  CHECK(c.neg == 0);
  CHECK(mt_set({1, 2, 3}).elements().size() == 7);
  c = mt_counts({1, 2, 3, 4, 5});
  CHECK(c.pos == 429);
  CHECK(c.neg == 0);

  Rows example{{4}, {3, 5}, {3, 4, 5}, {3, 3, 4, 5}, {5, 3, 1, 4, 6}};
  CHECK(mt_rows_valid(example));
  CHECK(mt_sign(example) == -1);
  CHECK(mt_set({5, 3, 1, 4, 6}).sign_of(mt_encode(example)) == -1);
  CHECK(mt_decode(mt_encode(example)) == example);
  CHECK_THROWS_AS(mt_encode(Rows{{2}, {2, 2}, {1, 2, 3}}), std::invalid_argument);

  for (int n = 1; n <= 3; ++n)
    sweep(n, -2, 2, [](const std::vector<Int>& k) {
      auto b = brute_mt(k);
      auto m = mt_counts(k);
      CHECK(m.pos == b.pos);
      CHECK(m.neg == b.neg);
      SignedCounts e;
      for (const auto& [el, s] : mt_set(k).elements()) {
        e.add({1, 0}, s);
        CHECK(mt_set(k).sign_of(el) == s);
      }
      CHECK(e.pos == m.pos);
      CHECK(e.neg == m.neg);
    });
  for (Int a = 1; a <= 6; ++a)
    for (Int b = a + 1; b <= 6; ++b)
      for (Int d = b + 1; d <= 6; ++d) CHECK(mt_counts({a, b, d}).neg == 0);
}

TEST_CASE("arrow rows and patterns") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(arrow_patterns(n).size() == 1);
    CHECK(arrow_rows(n).elements().size() == static_cast<std::size_t>(std::pow(3, n)));
    auto c = arrow_patterns(n).counts();
    SignedCounts e;
    for (const auto& [el, s] : arrow_patterns(n).elements()) e.add({1, 0}, s);
    CHECK(e.pos == c.pos);
    CHECK(e.neg == c.neg);
  }
  auto t = pattern(3, {"SE", "SW", "SWSE"});
  CHECK(t[ap_index(3, 1, 3)] == kSE);
  CHECK(t[ap_index(3, 1, 2)] == kSW);
  CHECK(t[ap_index(3, 2, 3)] == kSWSE);
  CHECK(pattern_to_json(3, t) == nlohmann::json{"SE", "SW", "SWSE"});
  CHECK(ap_shifts(3, t) == std::vector<Int>{1, 1, -2});
  CHECK(deform_d({1, 2, 3}, t) == std::vector<Int>{2, 3, 1});
  CHECK(deform_e({1, 2, 3}, {kNW, kNWNE, kNE}).size() == 1);
  CHECK_THROWS_AS(arrow_pattern_code("NE"), std::invalid_argument);
}

TEST_CASE("shifted GT patterns") {
  auto c = sgt_counts({1, 2, 3});
  CHECK(c.pos == 10);
  CHECK(c.neg == 3);
  c = sgt_counts({1, 2, 3, 4, 5});
  CHECK(c.pos == 18913);
  CHECK(c.neg == 18484);
  CHECK(sgt_set({4}).size() == 1);
  CHECK(sgt_set({}).size() == 1);
  sweep(3, -2, 2, [](const std::vector<Int>& k) {
    SignedCounts e;
    for (const auto& [el, s] : sgt_set(k).elements()) e.add({1, 0}, s);
    auto d = sgt_counts(k);
    CHECK(e.pos == d.pos);
    CHECK(e.neg == d.neg);
  });
  for (int n = 1; n <= 3; ++n)
    sweep(n, -3, 3, [](const std::vector<Int>& k) { CHECK(mt_set(k).size() == sgt_set(k).size()); });
}

TEST_CASE("Xi") {
  auto x = Xi({1, 2, 3});
  auto r = verify(x);
  CHECK(r.ok);
  CHECK(r.domain.pos == 7);
  CHECK(xi_codomain({1, 2, 3}).size() == 7);
  for (const auto& [el, s] : x.domain().elements()) CHECK(x.forward(el).side == Side::Codomain);
  // a cancelled pair differs in one arrow
  for (const auto& [el, s] : x.codomain().elements()) {
    auto q = x.backward(el);
    if (q.side != Side::Codomain) continue;
    auto a = el.tag().to_ints(), b = q.element.tag().to_ints();
    int diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
    CHECK(diff == 1);
    CHECK(el.value() == q.element.value());
  }
  for (int n = 2; n <= 3; ++n)
    sweep(n, -2, 2, [](const std::vector<Int>& k) {
      auto rep = verify(Xi(k));
      CHECK_MESSAGE(rep.ok, rep.to_json().dump());
    });
  sweep(4, -1, 2, [](const std::vector<Int>& k) { CHECK(verify(Xi(k)).ok); });
  CHECK(verify(Xi({5, 3, 1, 4, 6})).ok);
}

TEST_CASE("Psi") {
  // n = 6, i = 4; the entry t'_{1,2} is t_{1,2} = SE by the insertion rule.
  auto before = pattern(5, {"SE", "SW", "SWSE", "SWSE", "SW", "SW", "SE", "SWSE", "SE", "SW"});
  auto after = pattern(6, {"SE", "SW", "SWSE", "SE", "SW", "SW", "SWSE", "SE", "SE", "SW", "SE", "SWSE", "SE", "SW",
                           "SW"});
  CHECK(Psi(6, 4).forward(Element::ints(before)) == SidedElement{Side::Codomain, Element::ints(after)});
  CHECK(Psi(6, 4).backward(Element::ints(after)) == SidedElement{Side::Domain, Element::ints(before)});

  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      auto rep = verify(Psi(n, i));
      CHECK(rep.ok);
      CHECK(rep.domain.size() == 1);
      CHECK(rep.codomain.size() == 1);
    }
  for (int i = 1; i <= 2; ++i) {
    auto q = Psi(2, i).forward(Element::ints(std::vector<Int>{}));
    CHECK(q.element == Element::ints(std::vector<Int>{i == 1 ? kSW : kSE}));
  }
  // c is unchanged by Ψ_{n,n} in the first n-1 positions
  Sijection p = Psi(4, 4);
  for (const auto& [el, s] : p.domain().elements()) {
    auto q = p.forward(el);
    auto c = ap_shifts(3, el.to_ints());
    auto d = ap_shifts(4, q.element.to_ints());
    d.pop_back();
    CHECK(c == d);
  }
}

TEST_CASE("Lambda") {
  auto rep = verify(Lambda(3, 2));
  CHECK(rep.ok);
  CHECK(rep.domain.pos == 14);
  CHECK(rep.domain.neg == 13);
  CHECK(Lambda(3, 2).backward(Element::dot()).element == Element::ints(std::vector<Int>{kNW, kNW, kNE}));
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      auto l = Lambda(n, i);
      CHECK(verify(l).ok);
      for (const auto& [el, s] : l.domain().elements()) {
        auto q = l.forward(el);
        if (q.side == Side::Codomain) continue;
        auto a = el.to_ints(), b = q.element.to_ints();
        for (int p = 0; p < n; ++p) {
          if (p < i - 1) CHECK(delta_ne(a[p]) == delta_ne(b[p]));
          if (p > i - 1) CHECK(delta_nw(a[p]) == delta_nw(b[p]));
        }
      }
    }
}

TEST_CASE("Phi") {
  auto one = verify(Phi({4}, 0));
  CHECK(one.ok);
  CHECK(one.domain.pos == 2);
  CHECK(one.domain.neg == 1);
  for (Int x : {0, 1}) CHECK(verify(Phi({1, 2}, x)).ok);
  auto r = verify(Phi({1, 2, 3}, 0));
  CHECK(r.ok);
  CHECK(r.domain.size() == 7);
  CHECK(r.codomain.size() == 7);
  for (int n = 1; n <= 3; ++n)
    sweep(n, -1, 2, [](const std::vector<Int>& k) {
      for (Int x = -1; x <= 1; ++x) {
        auto rep = verify(Phi(k, x));
        CHECK_MESSAGE(rep.ok, rep.to_json().dump());
      }
    });
}

TEST_CASE("Gamma") {
  for (int n = 1; n <= 3; ++n)
    sweep(n, -2, 2, [](const std::vector<Int>& k) {
      for (Int x = -1; x <= 1; ++x) {
        auto rep = verify(Gamma(k, x));
        CHECK_MESSAGE(rep.ok, rep.to_json().dump());
      }
    });
  auto r = verify(Gamma({1, 2, 3, 4}, 0));
  CHECK(r.ok);
  CHECK(r.domain.pos == 42);
  sweep(4, 0, 2, [](const std::vector<Int>& k) { CHECK(verify(Gamma(k, 1)).ok); });
}

TEST_CASE("Gamma depends on x") {
  auto g0 = Gamma({1, 2, 3}, 0), g1 = Gamma({1, 2, 3}, 1);
  bool differ = false;
  for (const auto& [el, s] : g0.domain().elements()) differ |= !(g0.forward(el) == g1.forward(el));
  CHECK(differ);
  Element all_one = mt_encode(Rows{{1}, {1, 2}, {1, 2, 3}});
  auto q = g0.forward(all_one);
  CHECK(q.side == Side::Codomain);
  CHECK(q.element.tag() == Element::ints(pattern(3, {"SE", "SE", "SE"})));
  CHECK(gt_decode({1, 1, 1}, q.element.value()) == Rows{{1}, {1, 1}, {1, 1, 1}});
}

TEST_CASE("Gamma tables for (1,2,3)") {
  auto table = [](Int x) {
    std::vector<Int> k{1, 2, 3};
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& p : gamma_pairs(Gamma(k, x))) {
      auto a = gamma_element_text(k, p.first), b = gamma_element_text(k, p.second);
      out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    }
    return out;
  };
  auto norm = [](std::vector<std::pair<std::string, std::string>> v) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto& [a, b] : v) out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    return out;
  };
  std::vector<std::pair<std::string, std::string>> common{
      {"MT(1;1,2;1,2,3)", "(GT(1;1,1;1,1,1), SE SE SE)"},
      {"MT(1;1,3;1,2,3)", "(GT(1;1,2;1,2,2), SE SE SW)"},
      {"MT(2;1,3;1,2,3)", "(GT(2;2,3;2,2,3), SW SE SW)"},
      {"MT(3;1,3;1,2,3)", "(GT(3;2,3;2,2,3), SW SE SW)"},
      {"MT(3;2,3;1,2,3)", "(GT(3;3,3;3,3,3), SW SW SW)"},
  };
  auto x0 = common;
  x0.insert(x0.end(), {
                          {"MT(2;1,2;1,2,3)", "(GT(2;1,2;1,2,2), SE SE SW)"},
                          {"MT(2;2,3;1,2,3)", "(GT(2;2,2;3,1,2), SW SWSE SE)"},
                          {"(GT(2;2,2;2,2,3), SW SE SW)", "(GT(2;2,2;2,2,2), SWSE SE SW)"},
                          {"(GT(2;2,2;2,3,1), SE SW SWSE)", "(GT(2;2,2;2,2,2), SW SE SWSE)"},
                          {"(GT(2;2,2;1,2,2), SE SE SW)", "(GT(2;2,2;2,2,2), SE SWSE SW)"},
                      });
  auto x1 = common;
  x1.insert(x1.end(), {
                          {"MT(2;1,2;1,2,3)", "(GT(2;2,2;2,2,3), SW SE SW)"},
                          {"MT(2;2,3;1,2,3)", "(GT(2;2,2;1,2,2), SE SE SW)"},
                          {"(GT(2;1,2;1,2,2), SE SE SW)", "(GT(2;2,2;2,2,2), SWSE SE SW)"},
                          {"(GT(2;2,2;3,1,2), SW SWSE SE)", "(GT(2;2,2;2,2,2), SW SE SWSE)"},
                          {"(GT(2;2,2;2,3,1), SE SW SWSE)", "(GT(2;2,2;2,2,2), SE SWSE SW)"},
                      });
  CHECK(table(0) == norm(x0));
  CHECK(table(1) == norm(x1));
}
