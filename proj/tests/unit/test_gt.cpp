#include <doctest.h>

#include "sij/gt.hpp"

using namespace sij;

namespace {

// Brute force over triangular arrays with entries bounded by the bottom row.
Count brute_gt(const std::vector<Int>& k) {
  if (k.size() <= 1) return 1;
  Int lo = *std::min_element(k.begin(), k.end());
  Int hi = *std::max_element(k.begin(), k.end());
  Count total = 0;
  std::vector<Int> l(k.size() - 1, lo);
  while (true) {
    int sign = 1;
    bool ok = true;
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (k[j] <= l[j] && l[j] <= k[j + 1]) continue;
      if (k[j] > l[j] && l[j] > k[j + 1]) {
        sign = -sign;
        continue;
      }
      ok = false;
    }
    if (ok) total += sign * brute_gt(l);
    std::size_t j = 0;
    while (j < l.size() && l[j] == hi) l[j++] = lo;
    if (j == l.size()) break;
    ++l[j];
  }
  return total;
}

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

}  // namespace

TEST_CASE("gt_set small values") {
  CHECK(gt_set({5}).size() == 1);
  CHECK(gt_set({}).size() == 1);
  CHECK(gt_set({1, 2, 3}).size() == 8);
  CHECK(gt_set({3, 1}).size() == -1);
  CHECK(gt_set({1, 2, 3}).elements().size() == 8);
  CHECK(gt_polynomial({1, 2, 3}) == 8);
  CHECK(gt_polynomial({2, 1}) == 0);
  CHECK(gt_polynomial({3, 1}) == -1);
  CHECK(gt_polynomial({1, 2, 3, 4, 5}) == 1024);
}

TEST_CASE("gt size equals the polynomial and a brute force count") {
  for (int n = 1; n <= 4; ++n)
    sweep(n, -4, 4, [](const std::vector<Int>& k) {
      Count p = gt_polynomial(k);
      CHECK(gt_set(k).size() == p);
      if (k.size() <= 3) CHECK(brute_gt(k) == p);
    });
}

TEST_CASE("gt codec") {
  Element dot = Element::dot();
  CHECK(gt_decode({7}, dot) == Rows{{7}});
  CHECK(gt_encode(Rows{{7}}) == dot);

  Rows r{{2}, {2, 2}, {1, 2, 3}};
  Element e = gt_encode(r);
  CHECK(gt_set({1, 2, 3}).sign_of(e) == 1);
  CHECK(gt_decode({1, 2, 3}, e) == r);
  CHECK(gt_rows_sign(r) == 1);

  Rows d{{4}, {5, 2}};
  CHECK(gt_rows_valid(d));
  CHECK(gt_rows_sign(d) == -1);
  CHECK(gt_set({5, 2}).sign_of(gt_encode(d)) == -1);

  CHECK_THROWS_AS(gt_encode(Rows{{1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(gt_encode(Rows{{1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(rows_from_json(nlohmann::json::parse(R"({"rows":[[1],[1]]})")), std::invalid_argument);
  CHECK(rows_from_json(rows_to_json(r)) == r);

  sweep(3, -2, 2, [](const std::vector<Int>& k) {
    for (const auto& [el, sign] : gt_set(k).elements()) {
      Rows rows = gt_decode(k, el);
      CHECK(gt_rows_valid(rows));
      CHECK(gt_rows_sign(rows) == sign);
      CHECK(gt_encode(rows) == el);
    }
  });
}

TEST_CASE("rho") {
  auto r0 = rho({}, {}, 4);
  CHECK(verify(r0).ok);
  CHECK(r0.domain().size() == 1);

  auto r1 = rho({0}, {2}, 5);
  auto rep = verify(r1);
  CHECK(rep.ok);
  CHECK(r1.domain().size() == 3);
  CHECK(r1.codomain().size() == 3);
  CHECK(verify(rho({0, 1}, {1, 2}, 0)).ok);

  sweep(2, -2, 2, [](const std::vector<Int>& ab) {
    for (Int x = -2; x <= 2; ++x) CHECK(verify(rho({ab[0]}, {ab[1]}, x)).ok);
  });
  sweep(4, -1, 2, [](const std::vector<Int>& v) {
    for (Int x = -1; x <= 1; ++x) {
      auto s = rho({v[0], v[1]}, {v[2], v[3]}, x);
      auto rp = verify(s);
      CHECK_MESSAGE(rp.ok, rp.to_json().dump());
    }
  });
}

TEST_CASE("pi and sigma") {
  auto p = pi({4, 2}, 1);
  CHECK(verify(p).ok);
  CHECK(p.domain().size() == -1);
  CHECK(p.codomain().size() == -1);

  CHECK(pi_row({1, 2, 3}, 2) == std::vector<Int>{1, 4, 1});
  CHECK(gt_set({1, 4, 1}).size() == -8);
  CHECK(verify(pi({1, 2, 3}, 2)).ok);

  auto s = sigma({1, 0}, {2, 1}, 1);
  auto rs = verify(s);
  CHECK(rs.ok);
  CHECK(s.domain().size() == 0);
  CHECK_THROWS_AS(sigma({1, 1}, {2, 1}, 1), ConfigurationError);

  for (int n = 2; n <= 4; ++n)
    sweep(n, n == 4 ? -1 : -2, 2, [](const std::vector<Int>& k) {
      for (int i = 1; i + 1 <= static_cast<int>(k.size()); ++i) {
        auto f = pi(k, i);
        auto rep = verify(f);
        CHECK_MESSAGE(rep.ok, rep.to_json().dump());
        CHECK(gt_set(k).size() == -gt_set(pi_row(k, i)).size());
        if (k.size() > 3) continue;
        // π for the transformed row undoes π on crossings.
        auto g = pi(pi_row(k, i), i);
        for (const auto& [el, sign] : f.domain().elements()) {
          auto q = f.forward(el);
          if (q.side == Side::Codomain) CHECK(g.forward(q.element) == SidedElement{Side::Codomain, el});
        }
      }
    });

  sweep(4, -2, 2, [](const std::vector<Int>& v) {
    for (int i = 1; i <= 3; ++i) {
      std::vector<Int> a{v[0], v[1], v[1], v[0]};
      std::vector<Int> b{v[2], v[2], v[3], v[3]};
      a[i] = a[i - 1] - 1;
      b[i] = b[i - 1] - 1;
      auto sg = sigma(a, b, i);
      auto rep = verify(sg);
      CHECK_MESSAGE(rep.ok, rep.to_json().dump());
      CHECK(sg.domain().size() == 0);
    }
  });
}

TEST_CASE("tau") {
  auto t1 = tau({3}, 7);
  CHECK(verify(t1).ok);
  auto t2 = tau({0, 2}, 0);
  CHECK(verify(t2).ok);
  CHECK(t2.domain().size() == 3);
  CHECK(gt_set({1, 2}).size() + gt_set({0, 0}).size() == 3);
  auto t3 = tau({1, 2, 3}, 1);
  auto rep = verify(t3);
  CHECK(rep.ok);
  CHECK(t3.codomain().size() == 8);

  for (int n = 1; n <= 3; ++n)
    sweep(n, -2, 2, [](const std::vector<Int>& k) {
      for (Int x = -2; x <= 2; ++x) {
        auto r = verify(tau(k, x));
        CHECK_MESSAGE(r.ok, r.to_json().dump());
      }
    });
  sweep(4, -1, 1, [](const std::vector<Int>& k) {
    for (Int x = -1; x <= 1; ++x) CHECK(verify(tau(k, x)).ok);
  });
}
