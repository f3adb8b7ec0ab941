#pragma once

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sij/element.hpp"

namespace sij {

// Cache key built from an operation name and integer parameters.
class KeyBuilder {
 public:
  explicit KeyBuilder(std::string op) : key_(std::move(op)) {}
  KeyBuilder& add(Int v) {
    key_ += ':';
    key_ += std::to_string(v);
    return *this;
  }
  KeyBuilder& add(const std::vector<Int>& v) {
    key_ += ":(";
    for (Int x : v) {
      key_ += std::to_string(x);
      key_ += ',';
    }
    key_ += ')';
    return *this;
  }
  const std::string& str() const { return key_; }

 private:
  std::string key_;
};

namespace detail {
std::vector<std::function<void()>>& memo_clearers();
std::mutex& memo_registry_mutex();
}  // namespace detail

// Drops every cached value in every memo table. Long parameter sweeps call
// this between parameters to bound memory; sijections already built stay valid.
void clear_memo_tables();

// Read-mostly memo table. Values are built outside the lock so builders may
// recurse into the same table; a racing duplicate build is discarded.
template <class V>
class MemoTable {
 public:
  MemoTable() {
    std::lock_guard g(detail::memo_registry_mutex());
    detail::memo_clearers().push_back([this] {
      std::unique_lock lock(mutex_);
      map_.clear();
    });
  }
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  template <class Build>
  V get(const std::string& key, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = build();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::string, V> map_;
};

}  // namespace sij
