#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sij/interval_sijections.hpp"
#include "sij/mt_sgt.hpp"
#include "sij/oracles.hpp"

using namespace sij;

namespace {

// Thrown for malformed input; reported as JSON with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

nlohmann::json counts_json(const SignedCounts& c) {
  return {{"pos", count_to_json(c.pos)}, {"neg", count_to_json(c.neg)}, {"signed", count_to_json(c.size())}};
}

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

Int one(const std::vector<Int>& v, const char* name) {
  if (v.size() != 1) throw UsageError(std::string("--") + name + " takes exactly one integer here");
  return v[0];
}

struct Params {
  std::vector<Int> k, a, b, c;
  Int x = 0;
  int i = 1, n = 1;
  unsigned jobs = 1;
  std::size_t max_failures = 10;
  bool normal = false;
};

Sijection build(const std::string& name, const Params& p, nlohmann::json& params) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw UsageError(name + " needs " + what);
  };
  if (name == "alpha" || name == "alpha_split") {
    Int a = one(p.a, "a"), b = one(p.b, "b"), c = one(p.c, "c");
    params = {{"a", a}, {"b", b}, {"c", c}};
    return name == "alpha" ? alpha(a, b, c) : alpha_split(a, b, c);
  }
  if (name == "to_empty") {
    Int a = one(p.a, "a"), b = one(p.b, "b");
    params = {{"a", a}, {"b", b}};
    return to_empty(a, b);
  }
  if (name == "beta" || name == "rho" || name == "sigma") {
    need(!p.a.empty() && p.a.size() == p.b.size(), "--a and --b of equal length");
    params = {{"a", p.a}, {"b", p.b}};
    if (name == "sigma") {
      params["i"] = p.i;
      return sigma(p.a, p.b, p.i);
    }
    params["x"] = p.x;
    return name == "beta" ? beta(p.a, p.b, p.x) : rho(p.a, p.b, p.x);
  }
  if (name == "psi" || name == "lambda") {
    params = {{"n", p.n}, {"i", p.i}};
    return name == "psi" ? Psi(p.n, p.i) : Lambda(p.n, p.i);
  }
  need(!p.k.empty(), "--k");
  params = {{"k", p.k}};
  if (name == "pi") {
    params["i"] = p.i;
    return pi(p.k, p.i);
  }
  if (name == "xi") return Xi(p.k);
  params["x"] = p.x;
  if (name == "gamma_box") return gamma_box(p.k, p.x);
  if (name == "tau") return tau(p.k, p.x);
  if (name == "phi") return Phi(p.k, p.x);
  if (name == "gamma") return Gamma(p.k, p.x);
  throw UsageError("unknown sijection '" + name + "'");
}

int run_verify(const std::string& name, const Params& p) {
  nlohmann::json params;
  Sijection s = build(name, p, params);
  auto rep = verify(s, {p.jobs, p.max_failures, p.normal});
  rep.params = params;
  emit(rep.to_json());
  return rep.ok ? 0 : 1;
}

int run_gamma(const std::vector<Int>& k, Int x, bool table, bool text) {
  if (k.empty()) throw UsageError("gamma needs --k");
  Sijection g = Gamma(k, x);
  auto pairs = gamma_pairs(g);
  std::size_t mt_sgt = 0, mt_mt = 0, sgt_sgt = 0;
  for (const auto& q : pairs) {
    if (q.first.side != q.second.side)
      ++mt_sgt;
    else if (q.first.side == Side::Domain)
      ++mt_mt;
    else
      ++sgt_sgt;
  }
  if (text) {
    for (const auto& q : pairs)
      std::cout << gamma_element_text(k, q.first) << " <-> " << gamma_element_text(k, q.second) << "\n";
    return 0;
  }
  nlohmann::json j = {{"k", k},
                      {"x", x},
                      {"mt", counts_json(g.domain().counts())},
                      {"sgt", counts_json(g.codomain().counts())},
                      {"pair_count", pairs.size()},
                      {"mt_sgt_pairs", mt_sgt},
                      {"mt_mt_pairs", mt_mt},
                      {"sgt_sgt_pairs", sgt_sgt}};
  if (table) {
    auto arr = nlohmann::json::array();
    auto set_of = [&](Side s) -> const SignedSet& { return s == Side::Domain ? g.domain() : g.codomain(); };
    for (const auto& q : pairs)
      arr.push_back({{"first", gamma_element_json(k, set_of(q.first.side), q.first)},
                     {"second", gamma_element_json(k, set_of(q.second.side), q.second)}});
    j["pairs"] = arr;
  }
  emit(j);
  return 0;
}

// Invariant suites on every k ∈ [−r, r]^n, n ≤ max_n.
int run_sweep(int max_n, Int r, unsigned jobs) {
  if (max_n < 1 || r < 0) throw UsageError("sweep needs --max-n ≥ 1 and --range ≥ 0");
  std::size_t checks = 0;
  auto failures = nlohmann::json::array();
  auto check = [&](bool ok, const std::string& what, const nlohmann::json& at) {
    ++checks;
    if (!ok) failures.push_back({{"check", what}, {"at", at}});
  };
  auto verified = [&](const Sijection& s, const std::string& what, const nlohmann::json& at) {
    auto rep = verify(s, {jobs, 1});
    check(rep.ok, what, at);
  };
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      verified(Psi(n, i), "psi", {{"n", n}, {"i", i}});
      verified(Lambda(n, i), "lambda", {{"n", n}, {"i", i}});
    }
    std::vector<Int> k(n, -r);
    while (true) {
      nlohmann::json at = {{"k", k}};
      auto mt = mt_counts(k);
      check(gt_counts(k).size() == gt_polynomial(k), "gt size = gt polynomial", at);
      check(sgt_counts(k).size() == mt.size(), "sgt size = mt size", at);
      if (n <= 7) check(operator_formula(k) == mt.size(), "operator formula = mt size", at);
      for (Int x = -1; x <= 1; ++x) {
        nlohmann::json ax = {{"k", k}, {"x", x}};
        verified(tau(k, x), "tau", ax);
        verified(Phi(k, x), "phi", ax);
        verified(Gamma(k, x), "gamma", ax);
      }
      if (n >= 2) {
        verified(Xi(k), "xi", at);
        for (int i = 1; i < n; ++i) verified(pi(k, i), "pi", {{"k", k}, {"i", i}});
      }
      int j = 0;
      while (j < n && k[j] == r) k[j++] = -r;
      if (j == n) break;
      ++k[j];
    }
  }
  emit({{"max_n", max_n}, {"range", r}, {"checks", checks}, {"ok", failures.empty()}, {"failures", failures}});
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed bijections between monotone triangles and shifted Gelfand-Tsetlin patterns"};
  app.require_subcommand(1);

  std::string object, formula, name, direction, in_path = "-";
  Params p;
  int asm_n = 1, cap = 7, max_n = 3;
  Int range = 2;
  bool reference = false, table = false, text = false;

  auto* count = app.add_subcommand("count", "Positive, negative and signed size of MT(k), GT(k) or SGT(k)");
  count->add_option("object", object)->required()->check(CLI::IsMember({"mt", "gt", "sgt"}));
  count->add_option("--k", p.k)->required();

  auto* form = app.add_subcommand("formula", "Exact values of the counting formulas");
  form->add_option("which", formula)->required()->check(CLI::IsMember({"operator", "gtpoly", "asm"}));
  form->add_option("--k", p.k);
  form->add_option("--n", asm_n);
  form->add_option("--cap", cap, "Largest n accepted by the operator formula");
  form->add_flag("--reference", reference, "Sum monomials one at a time");
  form->add_option("--jobs", p.jobs);

  auto* ver = app.add_subcommand("verify", "Exhaustively check one sijection");
  ver->add_option("name", name)->required();
  ver->add_option("--k", p.k);
  ver->add_option("--a", p.a);
  ver->add_option("--b", p.b);
  ver->add_option("--c", p.c);
  ver->add_option("--x", p.x);
  ver->add_option("--i", p.i);
  ver->add_option("--n", p.n);
  ver->add_option("--jobs", p.jobs);
  ver->add_option("--max-failures", p.max_failures);
  ver->add_flag("--normal", p.normal, "Also check that the map preserves projections");

  auto* gam = app.add_subcommand("gamma", "Pairing of MT(k) with SGT(k)");
  gam->add_option("--k", p.k)->required();
  gam->add_option("--x", p.x)->required();
  gam->add_flag("--table", table, "List every pair");
  gam->add_flag("--text", text, "List every pair, one per line, as plain text");

  auto* conv = app.add_subcommand("convert", "Alternating sign matrix <-> monotone triangle");
  conv->add_option("direction", direction)->required()->check(CLI::IsMember({"asm2mt", "mt2asm"}));
  conv->add_option("--in", in_path, "Input file, - for stdin");

  auto* sw = app.add_subcommand("sweep", "Run the invariant suites on all small bottom rows");
  sw->add_option("--max-n", max_n);
  sw->add_option("--range", range);
  sw->add_option("--jobs", p.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"error", "usage"}, {"message", e.what()}});
    return 2;
  }

  try {
    if (*count) {
      SignedCounts c = object == "mt" ? mt_counts(p.k) : object == "gt" ? gt_counts(p.k) : sgt_counts(p.k);
      auto j = counts_json(c);
      j["object"] = object;
      j["k"] = p.k;
      emit(j);
      return 0;
    }
    if (*form) {
      nlohmann::json j = {{"formula", formula}};
      if (formula == "asm") {
        j["n"] = asm_n;
        j["value"] = count_to_json(asm_formula(asm_n));
      } else {
        if (form->count("--k") == 0) throw UsageError(formula + " needs --k");
        j["k"] = p.k;
        j["value"] = count_to_json(formula == "gtpoly" ? gt_polynomial(p.k)
                                                       : operator_formula(p.k, {cap, reference, p.jobs}));
      }
      emit(j);
      return 0;
    }
    if (*ver) return run_verify(name, p);
    if (*gam) return run_gamma(p.k, p.x, table, text);
    if (*conv) {
      std::string data = read_input(in_path);
      if (direction == "asm2mt") {
        Matrix a = matrix_from_text(data);
        auto bad = asm_violations(a);
        if (!bad.empty()) {
          emit({{"error", "invalid_asm"}, {"violations", bad}});
          return 2;
        }
        emit(rows_to_json(asm_to_mt(a)));
      } else {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(data);
        } catch (const nlohmann::json::parse_error& e) {
          throw UsageError(e.what());
        }
        emit({{"matrix", mt_to_asm(rows_from_json(j))}});
      }
      return 0;
    }
    if (*sw) return run_sweep(max_n, range, p.jobs);
  } catch (const UsageError& e) {
    emit({{"error", "usage"}, {"message", e.what()}});
    return 2;
  } catch (const ConfigurationError& e) {
    emit({{"error", "configuration"}, {"message", e.what()}});
    return 2;
  } catch (const std::invalid_argument& e) {
    emit({{"error", "invalid_input"}, {"message", e.what()}});
    return 2;
  } catch (const nlohmann::json::exception& e) {
    emit({{"error", "invalid_input"}, {"message", e.what()}});
    return 2;
  }
  return 2;
}
