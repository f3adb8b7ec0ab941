#include "sij/oracles.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sij {

namespace {

struct Pair {
  std::size_t p, q;
};

std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) out.push_back({p, q});
  return out;
}

// Term for monomial number m (base-3 digits: 0 = E_p, 1 = E_q^{-1}, 2 = −E_pE_q^{-1}).
Count monomial_term(const std::vector<Int>& k, const std::vector<Pair>& pairs, std::uint64_t m) {
  std::vector<Int> s = k;
  int sign = 1;
  for (const auto& [p, q] : pairs) {
    int d = static_cast<int>(m % 3);
    m /= 3;
    if (d != 1) ++s[p];
    if (d != 0) --s[q];
    if (d == 2) sign = -sign;
  }
  Count v = gt_polynomial(s);
  return sign > 0 ? v : Count(-v);
}

Count reference_sum(const std::vector<Int>& k, unsigned jobs) {
  auto pairs = all_pairs(k.size());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  jobs = std::max(1u, jobs);
  std::vector<Count> part(jobs);
  auto work = [&](unsigned j) {
    for (std::uint64_t m = j; m < total; m += jobs) part[j] += monomial_term(k, pairs, m);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (unsigned j = 0; j < jobs; ++j) ts.emplace_back(work, j);
    for (auto& t : ts) t.join();
  }
  Count acc = 0;
  for (const auto& c : part) acc += c;
  return acc;
}

Count grouped_sum(const std::vector<Int>& k) {
  const std::size_t n = k.size();
  std::map<std::vector<Int>, Count> coef{{std::vector<Int>(n, 0), 1}};
  for (const auto& [p, q] : all_pairs(n)) {
    std::map<std::vector<Int>, Count> next;
    for (const auto& [s, c] : coef) {
      auto t = s;
      ++t[p];
      next[t] += c;  // E_p
      --t[q];
      next[t] -= c;  // −E_pE_q^{-1}
      --t[p];
      next[t] += c;  // E_q^{-1}
    }
    coef.clear();
    for (auto& [s, c] : next)
      if (c != 0) coef.emplace(s, std::move(c));
  }
  Count acc = 0;
  for (const auto& [s, c] : coef) {
    std::vector<Int> at(n);
    for (std::size_t i = 0; i < n; ++i) at[i] = k[i] + s[i];
    acc += c * gt_polynomial(at);
  }
  return acc;
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

Count operator_formula(const std::vector<Int>& k, const OperatorOptions& opts) {
  if (static_cast<int>(k.size()) > opts.cap)
    throw std::invalid_argument("operator_formula: n = " + std::to_string(k.size()) + " exceeds the cap " +
                                std::to_string(opts.cap));
  if (k.size() <= 1) return 1;
  return opts.reference ? reference_sum(k, opts.jobs) : grouped_sum(k);
}

Count asm_formula(int n) {
  if (n < 1) throw std::invalid_argument("asm_formula: n must be at least 1");
  using boost::multiprecision::cpp_rational;
  auto fact = [](int m) {
    Count f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  cpp_rational acc = 1;
  for (int i = 0; i < n; ++i) acc *= cpp_rational(fact(3 * i + 1), fact(n + i));
  if (denominator(acc) != 1) throw std::logic_error("asm_formula: non-integral value");
  return numerator(acc);
}

std::vector<std::string> asm_violations(const Matrix& a) {
  std::vector<std::string> out;
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r)
    if (a[r].size() != n) {
      out.push_back("row " + std::to_string(r + 1) + " has length " + std::to_string(a[r].size()) + ", expected " +
                    std::to_string(n));
      return out;
    }
  auto check = [&](const std::string& what, std::size_t idx, auto at) {
    Int s = 0;
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      Int v = at(j);
      if (v < -1 || v > 1) ok = false;
      s += v;
      if (s < 0 || s > 1) ok = false;
    }
    if (s != 1) ok = false;
    if (!ok) out.push_back(what + " " + std::to_string(idx + 1) + " (" + [&] {
      std::vector<Int> v;
      for (std::size_t j = 0; j < n; ++j) v.push_back(at(j));
      return join(v);
    }() + ") does not alternate with sum 1");
  };
  for (std::size_t r = 0; r < n; ++r) check("row", r, [&](std::size_t j) { return a[r][j]; });
  for (std::size_t c = 0; c < n; ++c) check("column", c, [&](std::size_t j) { return a[j][c]; });
  return out;
}

Rows asm_to_mt(const Matrix& a) {
  auto bad = asm_violations(a);
  if (!bad.empty()) {
    std::string msg = "not an alternating sign matrix:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw std::invalid_argument(msg);
  }
  const std::size_t n = a.size();
  Rows rows;
  std::vector<Int> sums(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Int> row;
    for (std::size_t c = 0; c < n; ++c) {
      sums[c] += a[r][c];
      if (sums[c] == 1) row.push_back(static_cast<Int>(c + 1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix mt_to_asm(const Rows& rows) {
  const std::size_t n = rows.size();
  auto fail = [](const std::string& m) { throw std::invalid_argument("not a monotone triangle with bottom row 1..n: " + m); };
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != r + 1) fail("row " + std::to_string(r + 1) + " has the wrong length");
    for (std::size_t j = 0; j + 1 < rows[r].size(); ++j)
      if (rows[r][j] >= rows[r][j + 1]) fail("row " + std::to_string(r + 1) + " is not strictly increasing");
    for (auto v : rows[r])
      if (v < 1 || v > static_cast<Int>(n)) fail("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (r > 0)
      for (std::size_t j = 0; j < rows[r - 1].size(); ++j)
        if (rows[r][j] > rows[r - 1][j] || rows[r - 1][j] > rows[r][j + 1])
          fail("rows " + std::to_string(r) + " and " + std::to_string(r + 1) + " do not interlace");
  }
  Matrix a(n, std::vector<Int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (auto v : rows[r]) a[r][v - 1] += 1;
    if (r > 0)
      for (auto v : rows[r - 1]) a[r][v - 1] -= 1;
  }
  return a;
}

std::vector<Matrix> all_asms(int n) {
  if (n < 0) throw std::invalid_argument("all_asms: negative size");
  const std::size_t m = static_cast<std::size_t>(n);
  // Rows with entries in {-1,0,1} whose partial sums stay in {0,1} and end at 1.
  std::vector<std::vector<Int>> shapes;
  std::vector<Int> cur(m);
  std::function<void(std::size_t, Int)> rows_from = [&](std::size_t j, Int s) {
    if (j == m) {
      if (s == 1) shapes.push_back(cur);
      return;
    }
    for (Int v = -1; v <= 1; ++v) {
      if (s + v < 0 || s + v > 1) continue;
      cur[j] = v;
      rows_from(j + 1, s + v);
    }
  };
  rows_from(0, 0);
  std::vector<Matrix> out;
  Matrix a;
  std::vector<Int> col(m, 0);
  std::function<void()> grow = [&] {
    if (a.size() == m) {
      for (auto c : col)
        if (c != 1) return;
      out.push_back(a);
      return;
    }
    for (const auto& r : shapes) {
      bool ok = true;
      for (std::size_t c = 0; c < m && ok; ++c) ok = col[c] + r[c] >= 0 && col[c] + r[c] <= 1;
      if (!ok) continue;
      for (std::size_t c = 0; c < m; ++c) col[c] += r[c];
      a.push_back(r);
      grow();
      a.pop_back();
      for (std::size_t c = 0; c < m; ++c) col[c] -= r[c];
    }
  };
  grow();
  return out;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  Matrix a;
  for (const auto& r : j) {
    if (!r.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
    std::vector<Int> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw std::invalid_argument("matrix: entries must be integers");
      row.push_back(v.get<Int>());
    }
    a.push_back(std::move(row));
  }
  return a;
}

Matrix matrix_from_text(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("matrix: ") + e.what());
    }
    return matrix_from_json(j);
  }
  Matrix a;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      Int v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("matrix: bad entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) a.push_back(std::move(row));
  }
  return a;
}

}  // namespace sij
