#include "sij/signed_set.hpp"

#include <stdexcept>

namespace sij {

struct SignedSet::Impl {
  Kind kind = Kind::Empty;
  std::string key;
  std::optional<int> dimension;
  Int a = 0;
  Int b = 0;
  Element element;
  int sign = 1;
  std::vector<SignedSet> children;  // factors, or {inner}, or {index}
  FamilyRule rule;
  std::function<SignedCounts()> counts;
  FamilySpec family;
};

namespace {

std::shared_ptr<SignedSet::Impl> make(SignedSet::Kind kind) {
  auto impl = std::make_shared<SignedSet::Impl>();
  impl->kind = kind;
  return impl;
}

}  // namespace

SignedSet::SignedSet() : SignedSet(empty()) {}

SignedSet SignedSet::empty(std::optional<int> dimension) {
  auto impl = make(Kind::Empty);
  impl->key = "0";
  impl->dimension = dimension;
  return SignedSet(impl);
}

SignedSet SignedSet::interval(Int a, Int b) {
  auto impl = make(Kind::Interval);
  impl->a = a;
  impl->b = b;
  impl->dimension = 1;
  impl->key = "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return SignedSet(impl);
}

SignedSet SignedSet::singleton(Element e, int sign, std::optional<int> dimension) {
  auto impl = make(Kind::Singleton);
  impl->key = "{" + e.str() + (sign > 0 ? "}+" : "}-");
  impl->element = std::move(e);
  impl->sign = sign > 0 ? 1 : -1;
  impl->dimension = dimension;
  return SignedSet(impl);
}

SignedSet SignedSet::opposite(const SignedSet& inner) {
  if (inner.kind() == Kind::Opposite) return inner.inner();
  auto impl = make(Kind::Opposite);
  impl->key = "-" + inner.key();
  impl->dimension = inner.dimension();
  impl->children = {inner};
  return SignedSet(impl);
}

SignedSet SignedSet::product(std::vector<SignedSet> factors) {
  auto impl = make(Kind::Product);
  impl->key = "(";
  int dim = 0;
  bool known = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) impl->key += "x";
    impl->key += factors[i].key();
    if (auto d = factors[i].dimension())
      dim += *d;
    else
      known = false;
  }
  impl->key += ")";
  if (known) impl->dimension = dim;
  impl->children = std::move(factors);
  return SignedSet(impl);
}

SignedSet SignedSet::disjoint_union(SignedSet index, std::string name, FamilyRule rule,
                                    std::optional<int> dimension,
                                    std::function<SignedCounts()> counts) {
  auto impl = make(Kind::DisjointUnion);
  impl->key = "U(" + index.key() + ";" + name + ")";
  impl->dimension = dimension;
  impl->children = {std::move(index)};
  impl->rule = std::move(rule);
  impl->counts = std::move(counts);
  return SignedSet(impl);
}

SignedSet SignedSet::union_of(std::vector<SignedSet> parts, Int first) {
  std::string name = "parts{";
  std::optional<int> dim;
  bool common = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) name += "|";
    name += parts[i].key();
    auto d = parts[i].dimension();
    if (!d || (dim && *dim != *d)) common = false;
    dim = d;
  }
  name += "}";
  if (!common || parts.empty()) dim.reset();
  auto index = interval(first, first + static_cast<Int>(parts.size()) - 1);
  return disjoint_union(
      index, name,
      [parts = std::move(parts), first](const Element& t) { return parts.at(t.as_int() - first); },
      dim);
}

SignedSet SignedSet::family(FamilySpec spec) {
  auto impl = make(Kind::Family);
  impl->key = spec.key;
  impl->family = std::move(spec);
  return SignedSet(impl);
}

SignedSet::Kind SignedSet::kind() const { return impl_->kind; }
const std::string& SignedSet::key() const { return impl_->key; }
std::optional<int> SignedSet::dimension() const { return impl_->dimension; }
Int SignedSet::lo() const { return impl_->a; }
Int SignedSet::hi() const { return impl_->b; }
const std::vector<SignedSet>& SignedSet::factors() const { return impl_->children; }
const SignedSet& SignedSet::inner() const { return impl_->children.at(0); }
const SignedSet& SignedSet::index() const { return impl_->children.at(0); }

SignedSet SignedSet::fibre(const Element& t) const {
  if (impl_->kind != Kind::DisjointUnion) throw std::logic_error("fibre() on a non-union set");
  return impl_->rule(t);
}

namespace {

void product_rec(const std::vector<SignedSet>& factors, std::size_t pos,
                 std::vector<Element>& prefix, int sign, const Visitor& visit) {
  if (pos == factors.size()) {
    visit(Element::tuple(prefix), sign);
    return;
  }
  factors[pos].for_each([&](const Element& e, int s) {
    prefix.push_back(e);
    product_rec(factors, pos + 1, prefix, sign * s, visit);
    prefix.pop_back();
  });
}

void product_xi_rec(const std::vector<SignedSet>& factors, std::size_t pos, std::vector<Element>& prefix,
                    std::vector<Int>& xs, int sign, const XiVisitor& visit) {
  if (pos == factors.size()) {
    visit(Element::tuple(prefix), sign, xs);
    return;
  }
  factors[pos].for_each_xi([&](const Element& e, int s, const std::vector<Int>& x) {
    prefix.push_back(e);
    xs.insert(xs.end(), x.begin(), x.end());
    product_xi_rec(factors, pos + 1, prefix, xs, sign * s, visit);
    xs.resize(xs.size() - x.size());
    prefix.pop_back();
  });
}

}  // namespace

void SignedSet::for_each_xi(const XiVisitor& visit) const {
  const Impl& m = *impl_;
  if (m.kind == Kind::Empty) return;
  if (!m.dimension) throw std::invalid_argument("projection on a non-elementary set " + m.key);
  switch (m.kind) {
    case Kind::Empty:
      return;
    case Kind::Interval:
      for_each([&](const Element& e, int s) { visit(e, s, {e.as_int()}); });
      return;
    case Kind::Singleton:
      visit(m.element, m.sign, m.element.is_int() ? std::vector<Int>{m.element.as_int()} : m.element.to_ints());
      return;
    case Kind::Opposite:
      inner().for_each_xi([&](const Element& e, int s, const std::vector<Int>& x) { visit(e, -s, x); });
      return;
    case Kind::Product: {
      std::vector<Element> prefix;
      std::vector<Int> xs;
      prefix.reserve(m.children.size());
      product_xi_rec(m.children, 0, prefix, xs, 1, visit);
      return;
    }
    case Kind::DisjointUnion:
      index().for_each([&](const Element& t, int st) {
        m.rule(t).for_each_xi(
            [&](const Element& s, int ss, const std::vector<Int>& x) { visit(Element::tagged(s, t), ss * st, x); });
      });
      return;
    case Kind::Family:
      break;
  }
  throw std::invalid_argument("projection on a non-elementary set " + m.key);
}

void SignedSet::for_each(const Visitor& visit) const {
  const Impl& m = *impl_;
  switch (m.kind) {
    case Kind::Empty:
      return;
    case Kind::Interval:
      if (m.a <= m.b) {
        for (Int v = m.a; v <= m.b; ++v) visit(Element::integer(v), 1);
      } else {
        for (Int v = m.b + 1; v <= m.a - 1; ++v) visit(Element::integer(v), -1);
      }
      return;
    case Kind::Singleton:
      visit(m.element, m.sign);
      return;
    case Kind::Opposite:
      inner().for_each([&](const Element& e, int s) { visit(e, -s); });
      return;
    case Kind::Product: {
      std::vector<Element> prefix;
      prefix.reserve(m.children.size());
      product_rec(m.children, 0, prefix, 1, visit);
      return;
    }
    case Kind::DisjointUnion:
      index().for_each([&](const Element& t, int st) {
        m.rule(t).for_each([&](const Element& s, int ss) { visit(Element::tagged(s, t), ss * st); });
      });
      return;
    case Kind::Family:
      m.family.enumerate(visit);
      return;
  }
}

std::vector<std::pair<Element, int>> SignedSet::elements() const {
  std::vector<std::pair<Element, int>> out;
  for_each([&](const Element& e, int s) { out.emplace_back(e, s); });
  return out;
}

std::optional<int> SignedSet::sign_of(const Element& e) const {
  const Impl& m = *impl_;
  switch (m.kind) {
    case Kind::Empty:
      return std::nullopt;
    case Kind::Interval: {
      if (!e.is_int()) return std::nullopt;
      Int v = e.as_int();
      if (m.a <= m.b) return (v >= m.a && v <= m.b) ? std::optional<int>(1) : std::nullopt;
      return (v > m.b && v < m.a) ? std::optional<int>(-1) : std::nullopt;
    }
    case Kind::Singleton:
      return e == m.element ? std::optional<int>(m.sign) : std::nullopt;
    case Kind::Opposite: {
      auto s = inner().sign_of(e);
      if (s) return -*s;
      return std::nullopt;
    }
    case Kind::Product: {
      if (!e.is_tuple() || e.arity() != m.children.size()) return std::nullopt;
      int sign = 1;
      for (std::size_t i = 0; i < m.children.size(); ++i) {
        auto s = m.children[i].sign_of(e[i]);
        if (!s) return std::nullopt;
        sign *= *s;
      }
      return sign;
    }
    case Kind::DisjointUnion: {
      if (!e.is_tagged()) return std::nullopt;
      auto st = index().sign_of(e.tag());
      if (!st) return std::nullopt;
      auto ss = m.rule(e.tag()).sign_of(e.value());
      if (!ss) return std::nullopt;
      return *st * *ss;
    }
    case Kind::Family:
      return m.family.sign_of(e);
  }
  return std::nullopt;
}

SignedCounts SignedSet::counts() const {
  const Impl& m = *impl_;
  switch (m.kind) {
    case Kind::Empty:
      return {};
    case Kind::Interval:
      if (m.a <= m.b) return {Count(m.b - m.a + 1), 0};
      return {0, Count(m.a - m.b - 1)};
    case Kind::Singleton:
      return m.sign > 0 ? SignedCounts{1, 0} : SignedCounts{0, 1};
    case Kind::Opposite:
      return inner().counts().flipped();
    case Kind::Product: {
      SignedCounts acc{1, 0};
      for (const auto& f : m.children) {
        auto c = f.counts();
        acc = {acc.pos * c.pos + acc.neg * c.neg, acc.pos * c.neg + acc.neg * c.pos};
      }
      return acc;
    }
    case Kind::DisjointUnion: {
      if (m.counts) return m.counts();
      SignedCounts acc;
      index().for_each([&](const Element& t, int st) { acc.add(m.rule(t).counts(), st); });
      return acc;
    }
    case Kind::Family: {
      if (m.family.counts) return m.family.counts();
      SignedCounts acc;
      m.family.enumerate([&](const Element&, int s) { (s > 0 ? acc.pos : acc.neg) += 1; });
      return acc;
    }
  }
  return {};
}

std::vector<Int> SignedSet::xi(const Element& e) const {
  const Impl& m = *impl_;
  if (!m.dimension) throw std::invalid_argument("projection on a non-elementary set " + m.key);
  switch (m.kind) {
    case Kind::Interval:
      return {e.as_int()};
    case Kind::Singleton:
      if (e.is_int()) return {e.as_int()};
      return e.to_ints();
    case Kind::Opposite:
      return inner().xi(e);
    case Kind::Product: {
      std::vector<Int> out;
      for (std::size_t i = 0; i < m.children.size(); ++i) {
        auto part = m.children[i].xi(e[i]);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Kind::DisjointUnion:
      return m.rule(e.tag()).xi(e.value());
    case Kind::Empty:
    case Kind::Family:
      break;
  }
  throw std::invalid_argument("projection on a non-elementary set " + m.key);
}

SignedSet box(const std::vector<std::pair<Int, Int>>& bounds) {
  std::vector<SignedSet> factors;
  factors.reserve(bounds.size());
  for (auto [a, b] : bounds) factors.push_back(SignedSet::interval(a, b));
  return SignedSet::product(std::move(factors));
}

SignedSet chain_box(const std::vector<Int>& row) {
  std::vector<std::pair<Int, Int>> bounds;
  for (std::size_t i = 0; i + 1 < row.size(); ++i) bounds.emplace_back(row[i], row[i + 1]);
  return box(bounds);
}

}  // namespace sij
