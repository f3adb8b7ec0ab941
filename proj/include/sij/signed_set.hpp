#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sij/element.hpp"

namespace sij {

using Count = boost::multiprecision::cpp_int;

struct SignedCounts {
  Count pos = 0;
  Count neg = 0;

  Count size() const { return pos - neg; }
  Count total() const { return pos + neg; }
  SignedCounts flipped() const { return {neg, pos}; }
  SignedCounts& add(const SignedCounts& o, int sign) {
    if (sign > 0) {
      pos += o.pos;
      neg += o.neg;
    } else {
      pos += o.neg;
      neg += o.pos;
    }
    return *this;
  }
};

class SignedSet;
using FamilyRule = std::function<SignedSet(const Element&)>;
using Visitor = std::function<void(const Element&, int)>;
using XiVisitor = std::function<void(const Element&, int, const std::vector<Int>&)>;

// A set given by an enumerator and a membership/sign rule (MT(k), AR_n, ...).
struct FamilySpec {
  std::string key;
  std::function<void(const Visitor&)> enumerate;
  std::function<std::optional<int>(const Element&)> sign_of;
  std::function<SignedCounts()> counts;  // optional; falls back to enumeration
};

// Immutable, structurally described finite signed set.
//
// Enumeration order: intervals ascending, products lexicographic in factor
// order, disjoint unions in index order with each fibre enumerated in turn.
class SignedSet {
 public:
  enum class Kind { Empty, Interval, Singleton, Opposite, Product, DisjointUnion, Family };

  SignedSet();
  static SignedSet empty(std::optional<int> dimension = std::nullopt);
  static SignedSet interval(Int a, Int b);
  static SignedSet singleton(Element e, int sign = 1, std::optional<int> dimension = std::nullopt);
  static SignedSet opposite(const SignedSet& inner);
  static SignedSet product(std::vector<SignedSet> factors);
  // Disjoint union over `index`; elements are Tagged(s, t). `name` identifies
  // the rule and becomes part of the structural key, so equal names must mean
  // equal rules.
  static SignedSet disjoint_union(SignedSet index, std::string name, FamilyRule rule,
                                  std::optional<int> dimension = std::nullopt,
                                  std::function<SignedCounts()> counts = {});
  // S_first ⊔ S_{first+1} ⊔ ... indexed by the interval [first, first+n-1].
  static SignedSet union_of(std::vector<SignedSet> parts, Int first = 0);
  static SignedSet family(FamilySpec spec);

  Kind kind() const;
  const std::string& key() const;
  std::optional<int> dimension() const;

  Int lo() const;
  Int hi() const;
  const std::vector<SignedSet>& factors() const;
  const SignedSet& inner() const;
  const SignedSet& index() const;
  SignedSet fibre(const Element& t) const;

  void for_each(const Visitor& visit) const;
  std::vector<std::pair<Element, int>> elements() const;
  std::optional<int> sign_of(const Element& e) const;
  bool contains(const Element& e) const { return sign_of(e).has_value(); }
  SignedCounts counts() const;
  Count size() const { return counts().size(); }

  // Projection to the underlying integer tuple (elementary sets only).
  std::vector<Int> xi(const Element& e) const;
  // for_each, also passing ξ of each element (elementary sets only).
  void for_each_xi(const XiVisitor& visit) const;

  bool same_as(const SignedSet& o) const { return key() == o.key(); }

  struct Impl;

 private:
  explicit SignedSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Product of the intervals [bounds_i.first, bounds_i.second].
SignedSet box(const std::vector<std::pair<Int, Int>>& bounds);
// [r_1,r_2] x [r_2,r_3] x ... x [r_{m-1},r_m].
SignedSet chain_box(const std::vector<Int>& row);

}  // namespace sij
