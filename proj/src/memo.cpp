#include "sij/memo.hpp"

namespace sij {

namespace detail {

std::vector<std::function<void()>>& memo_clearers() {
  static std::vector<std::function<void()>> v;
  return v;
}

std::mutex& memo_registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

void clear_memo_tables() {
  std::lock_guard g(detail::memo_registry_mutex());
  for (auto& f : detail::memo_clearers()) f();
}

}  // namespace sij
