#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace sij {

using Int = std::int64_t;

// A finite value tree: integer leaf, tuple node or tagged pair (value, tag).
// The empty tuple doubles as the "dot" element of one-point sets.
class Element {
 public:
  enum class Kind : std::uint8_t { Int, Tuple, Tagged };

  Element();
  static Element integer(Int v);
  static Element tuple(std::vector<Element> items);
  static Element tagged(Element value, Element tag);
  static Element tagged(Element value, Int tag) { return tagged(std::move(value), integer(tag)); }
  static Element ints(std::span<const Int> values);
  static Element dot() { return Element(); }

  Kind kind() const { return kind_; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_tuple() const { return kind_ == Kind::Tuple; }
  bool is_tagged() const { return kind_ == Kind::Tagged; }

  Int as_int() const;
  std::span<const Element> items() const;
  std::size_t arity() const { return items().size(); }
  const Element& operator[](std::size_t i) const { return items()[i]; }
  const Element& value() const;
  const Element& tag() const;
  // Tuple of integer leaves as a vector.
  std::vector<Int> to_ints() const;

  std::size_t hash() const { return hash_; }

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b);

  nlohmann::json to_json() const;
  static Element from_json(const nlohmann::json& j);
  std::string str() const;

 private:
  struct Node {
    std::vector<Element> items;
  };

  Kind kind_ = Kind::Tuple;
  Int value_ = 0;
  std::size_t hash_ = 0;
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

}  // namespace sij
