#include "sij/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace sij {
namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

constexpr std::size_t kTupleSeed = 0x51ed270b;
constexpr std::size_t kTaggedSeed = 0x2545f491;

}  // namespace

Element::Element() : kind_(Kind::Tuple), hash_(mix(kTupleSeed, 0)) {}

Element Element::integer(Int v) {
  Element e;
  e.kind_ = Kind::Int;
  e.value_ = v;
  e.hash_ = std::hash<Int>{}(v) * 0x9e3779b97f4a7c15ULL;
  return e;
}

Element Element::tuple(std::vector<Element> items) {
  Element e;
  std::size_t h = kTupleSeed;
  for (const auto& it : items) h = mix(h, it.hash_);
  e.hash_ = mix(h, items.size());
  if (!items.empty()) e.node_ = std::make_shared<const Node>(Node{std::move(items)});
  return e;
}

Element Element::tagged(Element value, Element tag) {
  Element e;
  e.kind_ = Kind::Tagged;
  e.hash_ = mix(mix(kTaggedSeed, value.hash_), tag.hash_);
  std::vector<Element> items;
  items.reserve(2);
  items.push_back(std::move(value));
  items.push_back(std::move(tag));
  e.node_ = std::make_shared<const Node>(Node{std::move(items)});
  return e;
}

Element Element::ints(std::span<const Int> values) {
  std::vector<Element> items;
  items.reserve(values.size());
  for (Int v : values) items.push_back(integer(v));
  return tuple(std::move(items));
}

Int Element::as_int() const {
  if (kind_ != Kind::Int) throw std::invalid_argument("element is not an integer: " + str());
  return value_;
}

std::span<const Element> Element::items() const {
  if (kind_ != Kind::Tuple) throw std::invalid_argument("element is not a tuple: " + str());
  if (!node_) return {};
  return node_->items;
}

const Element& Element::value() const {
  if (kind_ != Kind::Tagged) throw std::invalid_argument("element is not tagged: " + str());
  return node_->items[0];
}

const Element& Element::tag() const {
  if (kind_ != Kind::Tagged) throw std::invalid_argument("element is not tagged: " + str());
  return node_->items[1];
}

std::vector<Int> Element::to_ints() const {
  std::vector<Int> out;
  for (const auto& it : items()) out.push_back(it.as_int());
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.hash_ != b.hash_ || a.kind_ != b.kind_) return false;
  if (a.kind_ == Element::Kind::Int) return a.value_ == b.value_;
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->items == b.node_->items;
}

bool operator<(const Element& a, const Element& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.kind_ == Element::Kind::Int) return a.value_ < b.value_;
  static const std::vector<Element> none;
  const auto& x = a.node_ ? a.node_->items : none;
  const auto& y = b.node_ ? b.node_->items : none;
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

nlohmann::json Element::to_json() const {
  switch (kind_) {
    case Kind::Int:
      return value_;
    case Kind::Tuple: {
      auto arr = nlohmann::json::array();
      for (const auto& it : items()) arr.push_back(it.to_json());
      return arr;
    }
    case Kind::Tagged:
      return {{"v", value().to_json()}, {"t", tag().to_json()}};
  }
  return nullptr;
}

Element Element::from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return integer(j.get<Int>());
  if (j.is_array()) {
    std::vector<Element> items;
    for (const auto& it : j) items.push_back(from_json(it));
    return tuple(std::move(items));
  }
  if (j.is_object() && j.size() == 2 && j.contains("v") && j.contains("t"))
    return tagged(from_json(j["v"]), from_json(j["t"]));
  throw std::invalid_argument("not an element encoding: " + j.dump());
}

std::string Element::str() const { return to_json().dump(); }

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

}  // namespace sij
