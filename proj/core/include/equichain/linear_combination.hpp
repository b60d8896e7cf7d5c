#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace equichain {

using Integer = mpz_class;

/// Sparse integer combination of keys. The term list is kept sorted by key
/// and never stores a zero coefficient, so equality is structural.
template <class Key>
class LinearCombination {
 public:
  using Term = std::pair<Key, Integer>;
  using const_iterator = typename std::vector<Term>::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Integer coefficient = 1) {
    if (coefficient != 0) terms_.emplace_back(std::move(key), std::move(coefficient));
  }

  /// Sorts and merges an arbitrary term list.
  static LinearCombination from_terms(std::vector<Term> raw) {
    LinearCombination out;
    if (raw.empty()) return out;
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    out.terms_.reserve(raw.size());
    for (auto& term : raw) {
      if (!out.terms_.empty() && out.terms_.back().first == term.first) {
        out.terms_.back().second += term.second;
      } else {
        if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
        out.terms_.push_back(std::move(term));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Key& key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Key& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return 0;
  }

  void add_scaled(const LinearCombination& other, const Integer& scale) {
    if (scale == 0 || other.terms_.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        merged.emplace_back(b->first, b->second * scale);
        ++b;
      } else {
        Integer c = a->second + b->second * scale;
        if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    add_scaled(other, 1);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    add_scaled(other, -1);
    return *this;
  }
  LinearCombination& operator*=(const Integer& scale) {
    if (scale == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= scale;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    a += b;
    return a;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    a -= b;
    return a;
  }
  friend LinearCombination operator-(LinearCombination a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend LinearCombination operator*(const Integer& scale, LinearCombination a) {
    a *= scale;
    return a;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second)
        return false;
    }
    return true;
  }

  template <class Pred>
  LinearCombination filter(Pred keep) const {
    LinearCombination out;
    for (const auto& t : terms_)
      if (keep(t.first)) out.terms_.push_back(t);
    return out;
  }

 private:
  std::vector<Term> terms_;
};

/// Collects terms in any order; `take()` produces the normal form.
template <class Key>
class Accumulator {
 public:
  using Term = typename LinearCombination<Key>::Term;

  void add(const Key& key, const Integer& coefficient) {
    if (coefficient != 0) raw_.emplace_back(key, coefficient);
  }
  void add(Key&& key, Integer&& coefficient) {
    if (coefficient != 0) raw_.emplace_back(std::move(key), std::move(coefficient));
  }
  void add(const LinearCombination<Key>& lc, const Integer& scale = 1) {
    if (scale == 0) return;
    for (const auto& [key, c] : lc) raw_.emplace_back(key, c * scale);
  }
  void add(const LinearCombination<Key>& lc, int sign) {
    if (sign == 1) {
      for (const auto& t : lc) raw_.push_back(t);
    } else {
      for (const auto& [key, c] : lc) raw_.emplace_back(key, c * sign);
    }
  }

  bool empty() const { return raw_.empty(); }

  LinearCombination<Key> take() {
    auto out = LinearCombination<Key>::from_terms(std::move(raw_));
    raw_.clear();
    return out;
  }

 private:
  std::vector<Term> raw_;
};

/// (-1)^k for any integer k.
constexpr int sign_of(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace equichain
