#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace momapf {

using Cost = std::int64_t;

/// M-dimensional integer cost vector. All solver arithmetic is exact.
struct CostVec {
  boost::container::small_vector<Cost, 4> c;

  CostVec() = default;
  CostVec(std::initializer_list<Cost> init) : c(init) {}
  static CostVec zeros(std::size_t m) {
    CostVec v;
    v.c.assign(m, 0);
    return v;
  }

  std::size_t size() const { return c.size(); }
  Cost operator[](std::size_t m) const { return c[m]; }
  Cost& operator[](std::size_t m) { return c[m]; }

  bool operator==(const CostVec& o) const { return c == o.c; }
  bool operator!=(const CostVec& o) const { return !(*this == o); }

  CostVec& operator+=(const CostVec& o) {
    require_same_size(*this, o);
    for (std::size_t m = 0; m < c.size(); ++m) c[m] += o.c[m];
    return *this;
  }

  /// Componentwise k*this.
  CostVec scaled(Cost k) const {
    CostVec r = *this;
    for (auto& x : r.c) x *= k;
    return r;
  }

  static void require_same_size(const CostVec& a, const CostVec& b) {
    if (a.size() != b.size())
      throw std::invalid_argument("cost vector length mismatch: " +
                                  std::to_string(a.size()) + " vs " +
                                  std::to_string(b.size()));
  }
};

inline CostVec operator+(CostVec a, const CostVec& b) {
  a += b;
  return a;
}

/// a dominates b: componentwise a(m) <= b(m) with at least one strict <.
inline bool dominates(const CostVec& a, const CostVec& b) {
  CostVec::require_same_size(a, b);
  bool strict = false;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] > b[m]) return false;
    if (a[m] < b[m]) strict = true;
  }
  return strict;
}

inline bool dominates_or_equal(const CostVec& a, const CostVec& b) {
  CostVec::require_same_size(a, b);
  for (std::size_t m = 0; m < a.size(); ++m)
    if (a[m] > b[m]) return false;
  return true;
}

/// Total order on equal-length vectors, component 0 first. Used for
/// deterministic queues and canonical output sorting.
inline bool lex_less(const CostVec& a, const CostVec& b) {
  CostVec::require_same_size(a, b);
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] != b[m]) return a[m] < b[m];
  }
  return false;
}

inline std::string to_string(const CostVec& v) {
  std::string s = "(";
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (m) s += ",";
    s += std::to_string(v[m]);
  }
  s += ")";
  return s;
}

}  // namespace momapf
