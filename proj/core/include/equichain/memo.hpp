#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace equichain {

/// Thread-safe memo table. The value is computed outside the lock so that
/// recursive computations may consult the same table; concurrent callers
/// racing on one key compute equal values and the first insertion wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) const {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace equichain
