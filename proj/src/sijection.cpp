#include "sij/sijection.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

namespace sij {

nlohmann::json SidedElement::to_json() const {
  return {{"side", side == Side::Domain ? "domain" : "codomain"}, {"element", element.to_json()}};
}

Sijection::Sijection(std::string name, SignedSet domain, SignedSet codomain, ApplyFn apply)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      apply_(std::make_shared<const ApplyFn>(std::move(apply))) {}

Sijection::Sijection(std::string name, SignedSet domain, SignedSet codomain, std::shared_ptr<const ApplyFn> apply)
    : name_(std::move(name)), domain_(std::move(domain)), codomain_(std::move(codomain)), apply_(std::move(apply)) {}

Sijection identity(const SignedSet& s) {
  return Sijection("id", s, s, [](const SidedElement& x) { return SidedElement{other(x.side), x.element}; });
}

Sijection inverse(const Sijection& phi) {
  return Sijection(phi.name() + "^-1", phi.codomain(), phi.domain(), [f = phi.fn()](const SidedElement& x) {
    SidedElement r = (*f)({other(x.side), x.element});
    return SidedElement{other(r.side), std::move(r.element)};
  });
}

Sijection negate(const Sijection& phi) {
  return Sijection("-" + phi.name(), SignedSet::opposite(phi.domain()), SignedSet::opposite(phi.codomain()),
                   phi.fn());
}

Sijection rebind(const Sijection& phi, std::string name, SignedSet domain, SignedSet codomain) {
  return Sijection(std::move(name), std::move(domain), std::move(codomain), phi.fn());
}

namespace {

constexpr std::size_t kSoftStepLimit = 1u << 20;

[[noreturn]] void runaway(const std::string& name, const SidedElement& start) {
  throw std::runtime_error("composition " + name + " exceeded its iteration bound starting from " +
                           start.to_json().dump());
}

}  // namespace

Sijection compose(const Sijection& phi, const Sijection& psi) {
  if (!phi.codomain().same_as(psi.domain()))
    throw ConfigurationError("cannot compose " + phi.name() + " with " + psi.name() +
                             ": middle sets differ\n  " + phi.codomain().key() + "\n  " + psi.domain().key());
  std::string name = psi.name() + " o " + phi.name();
  if (name.size() > 200) name = "(" + psi.name().substr(0, 60) + " o ...)";
  auto fp = phi.fn();
  auto gp = psi.fn();
  SignedSet s = phi.domain(), t = phi.codomain(), u = psi.codomain();
  return Sijection(name, s, u, [fp, gp, s, t, u, name](const SidedElement& x) {
    const ApplyFn& f = *fp;
    const ApplyFn& g = *gp;
    std::size_t steps = 0;
    Count cap = -1;
    auto tick = [&] {
      if (++steps < kSoftStepLimit) return;
      if (cap < 0) cap = s.counts().total() + t.counts().total() + u.counts().total();
      if (Count(steps) > cap) runaway(name, x);
    };
    if (x.side == Side::Domain) {
      SidedElement cur = f(x);
      while (cur.side == Side::Codomain) {
        SidedElement nxt = g({Side::Domain, cur.element});
        if (nxt.side == Side::Codomain) return nxt;
        cur = f({Side::Codomain, nxt.element});
        tick();
      }
      return cur;
    }
    SidedElement cur = g(x);
    while (cur.side == Side::Domain) {
      SidedElement nxt = f({Side::Codomain, cur.element});
      if (nxt.side == Side::Domain) return nxt;
      cur = g({Side::Domain, nxt.element});
      tick();
    }
    return cur;
  });
}

Sijection compose_all(const std::vector<Sijection>& chain) {
  if (chain.empty()) throw ConfigurationError("empty composition chain");
  Sijection acc = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) acc = compose(acc, chain[i]);
  return acc;
}

Sijection product(const std::vector<Sijection>& factors) {
  std::vector<SignedSet> doms, cods;
  std::vector<std::shared_ptr<const ApplyFn>> fns;
  std::string name = "prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    doms.push_back(factors[i].domain());
    cods.push_back(factors[i].codomain());
    fns.push_back(factors[i].fn());
    name += (i ? "," : "") + factors[i].name();
  }
  name += ")";
  return Sijection(name, SignedSet::product(doms), SignedSet::product(cods), [fns](const SidedElement& x) {
    const auto items = x.element.items();
    std::vector<Element> out;
    out.reserve(fns.size());
    for (std::size_t i = 0; i < fns.size(); ++i) {
      SidedElement r = (*fns[i])({x.side, items[i]});
      if (r.side == x.side) {
        std::vector<Element> moved(items.begin(), items.end());
        moved[i] = std::move(r.element);
        return SidedElement{x.side, Element::tuple(std::move(moved))};
      }
      out.push_back(std::move(r.element));
    }
    return SidedElement{other(x.side), Element::tuple(std::move(out))};
  });
}

namespace {
std::function<void(const Sijection&)> relabel_observer;
}

void set_relabel_observer(std::function<void(const Sijection&)> observer) { relabel_observer = std::move(observer); }

Sijection relabel(std::string name, SignedSet from, SignedSet to, ElementMap forward, ElementMap backward) {
  Sijection s(std::move(name), std::move(from), std::move(to),
              [forward = std::move(forward), backward = std::move(backward)](const SidedElement& x) {
                if (x.side == Side::Domain) return SidedElement{Side::Codomain, forward(x.element)};
                return SidedElement{Side::Domain, backward(x.element)};
              });
  if (relabel_observer) relabel_observer(s);
  return s;
}

Sijection involution_to_empty(std::string name, SignedSet s, ElementMap involution) {
  return Sijection(std::move(name), std::move(s), SignedSet::empty(),
                   [involution = std::move(involution)](const SidedElement& x) {
                     if (x.side != Side::Domain) throw std::logic_error("element of the empty set");
                     return SidedElement{Side::Domain, involution(x.element)};
                   });
}

Sijection disjoint_union(std::string name, const Sijection& psi, const SignedSet& domain_set,
                         const SignedSet& codomain_set, FibreRule fibres) {
  if (domain_set.kind() != SignedSet::Kind::DisjointUnion || codomain_set.kind() != SignedSet::Kind::DisjointUnion)
    throw ConfigurationError(name + ": disjoint-union sijection needs union sets");
  if (!domain_set.index().same_as(psi.domain()) || !codomain_set.index().same_as(psi.codomain()))
    throw ConfigurationError(name + ": index sets do not match " + psi.name());
  auto p = psi.fn();
  if (!fibres) {
    return Sijection(std::move(name), domain_set, codomain_set, [p](const SidedElement& x) {
      SidedElement r = (*p)({x.side, x.element.tag()});
      return SidedElement{r.side, Element::tagged(x.element.value(), std::move(r.element))};
    });
  }
  return Sijection(std::move(name), domain_set, codomain_set, [p, fibres](const SidedElement& x) {
    const Element& t = x.element.tag();
    Sijection phi = fibres({x.side, t});
    SidedElement q = phi({Side::Domain, x.element.value()});
    if (q.side == Side::Domain) return SidedElement{x.side, Element::tagged(std::move(q.element), t)};
    SidedElement r = (*p)({x.side, t});
    return SidedElement{r.side, Element::tagged(std::move(q.element), std::move(r.element))};
  });
}

Sijection union_map(std::string name, const SignedSet& from, const SignedSet& to,
                    std::function<Sijection(const Element&)> fibres) {
  if (from.kind() != SignedSet::Kind::DisjointUnion || to.kind() != SignedSet::Kind::DisjointUnion ||
      !from.index().same_as(to.index()))
    throw ConfigurationError(name + ": tagwise union needs unions over the same index");
  return Sijection(std::move(name), from, to, [fibres](const SidedElement& x) {
    const Element& t = x.element.tag();
    SidedElement q = fibres(t)({x.side, x.element.value()});
    return SidedElement{q.side, Element::tagged(std::move(q.element), t)};
  });
}

Sijection union_of(const std::vector<Sijection>& parts, Int first) {
  std::vector<SignedSet> doms, cods;
  std::string name = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    doms.push_back(parts[i].domain());
    cods.push_back(parts[i].codomain());
    name += (i ? "," : "") + parts[i].name();
  }
  name += ")";
  return union_map(name, SignedSet::union_of(doms, first), SignedSet::union_of(cods, first),
                   [parts, first](const Element& t) -> const Sijection& { return parts.at(t.as_int() - first); });
}

nlohmann::json count_to_json(const Count& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["params"] = params;
  j["domain_size"] = count_to_json(domain.size());
  j["codomain_size"] = count_to_json(codomain.size());
  j["domain_pos"] = count_to_json(domain.pos);
  j["domain_neg"] = count_to_json(domain.neg);
  j["codomain_pos"] = count_to_json(codomain.pos);
  j["codomain_neg"] = count_to_json(codomain.neg);
  j["pair_count"] = pair_count;
  j["crossing_pairs"] = crossing_pairs;
  j["ok"] = ok;
  if (normal) j["normal"] = *normal;
  auto fs = nlohmann::json::array();
  for (const auto& f : failures) fs.push_back({{"kind", f.kind}, {"input", f.input.to_json()}, {"detail", f.detail}});
  j["failures"] = fs;
  return j;
}

namespace {

// Class A = Dom⁺ ⊔ Cod⁻, class B = Dom⁻ ⊔ Cod⁺.
bool in_class_a(Side side, int sign) { return (side == Side::Domain) == (sign > 0); }

}  // namespace

VerificationReport verify(const Sijection& phi, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.name = phi.name();
  struct Item {
    SidedElement x;
    int sign;
    std::vector<Int> xi;
  };
  auto elementary = [](const SignedSet& s) { return s.dimension() || s.kind() == SignedSet::Kind::Empty; };
  if (opts.check_normal) {
    if (!elementary(phi.domain()) || !elementary(phi.codomain()))
      throw std::invalid_argument("is_normal: " + phi.name() + " is not between elementary sets");
    rep.normal = true;
  }
  std::vector<Item> all;
  auto collect = [&](Side side, const SignedSet& set, SignedCounts& c) {
    auto add = [&](const Element& e, int s, std::vector<Int> xi) {
      all.push_back({{side, e}, s, std::move(xi)});
      (s > 0 ? c.pos : c.neg) += 1;
    };
    if (opts.check_normal)
      set.for_each_xi([&](const Element& e, int s, const std::vector<Int>& x) { add(e, s, x); });
    else
      set.for_each([&](const Element& e, int s) { add(e, s, {}); });
  };
  collect(Side::Domain, phi.domain(), rep.domain);
  collect(Side::Codomain, phi.codomain(), rep.codomain);

  auto fail = [&](std::string kind, const SidedElement& in, std::string detail) {
    rep.ok = false;
    if (rep.failures.size() < opts.max_failures) rep.failures.push_back({std::move(kind), in, std::move(detail)});
  };

  std::unordered_map<SidedElement, std::size_t, SidedElementHash> where;
  where.reserve(all.size() * 2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!where.emplace(all[i].x, i).second) fail("duplicate", all[i].x, "element enumerated twice");
  }

  std::vector<SidedElement> image(all.size());
  std::vector<std::string> errors(all.size());
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs > all.size() / 64 + 1) jobs = static_cast<unsigned>(all.size() / 64 + 1);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        image[i] = phi(all[i].x);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  if (jobs == 1) {
    work(0, all.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (all.size() + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      std::size_t b = j * chunk, e = std::min(all.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& t : pool) t.join();
  }

  std::size_t fixed_side_pairs = 0;
  std::size_t crossing = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& in = all[i];
    if (!errors[i].empty()) {
      fail("exception", in.x, errors[i]);
      continue;
    }
    auto it = where.find(image[i]);
    if (it == where.end()) {
      fail("not_member", in.x, "image " + image[i].to_json().dump() + " is not an element");
      continue;
    }
    const auto& out = all[it->second];
    if (rep.normal && in.xi != out.xi) {
      rep.normal = false;
      fail("not_normal", in.x, "image " + out.x.to_json().dump() + " has a different projection");
      continue;
    }
    if (in_class_a(in.x.side, in.sign) == in_class_a(out.x.side, out.sign)) {
      fail("sign", in.x, "image " + out.x.to_json().dump() + " is in the same sign class");
      continue;
    }
    if (!errors[it->second].empty() || !(image[it->second] == in.x)) {
      fail("involution", in.x, "image " + out.x.to_json().dump() + " does not map back");
      continue;
    }
    if (it->second > i) {
      if (in.x.side == out.x.side)
        ++fixed_side_pairs;
      else
        ++crossing;
    }
  }
  rep.crossing_pairs = crossing;
  rep.pair_count = fixed_side_pairs + crossing;
  return rep;
}

bool is_normal(const Sijection& phi) {
  auto elementary = [](const SignedSet& s) { return s.dimension() || s.kind() == SignedSet::Kind::Empty; };
  if (!elementary(phi.domain()) || !elementary(phi.codomain()))
    throw std::invalid_argument("is_normal: " + phi.name() + " is not between elementary sets");
  bool normal = true;
  auto check = [&](Side side, const SignedSet& own) {
    own.for_each([&](const Element& e, int) {
      if (!normal) return;
      SidedElement r = phi({side, e});
      const SignedSet& target = r.side == Side::Domain ? phi.domain() : phi.codomain();
      if (own.xi(e) != target.xi(r.element)) normal = false;
    });
  };
  check(Side::Domain, phi.domain());
  check(Side::Codomain, phi.codomain());
  return normal;
}

}  // namespace sij
