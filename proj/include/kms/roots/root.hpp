#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "kms/groupoid/vertex.hpp"

namespace kms {

using RootSet = std::set<IntVec>;

enum class RootClass { Anisotropic, Isotropic, NonReflectable, Imaginary };

inline const char* root_class_name(RootClass c) {
  switch (c) {
    case RootClass::Anisotropic: return "anisotropic";
    case RootClass::Isotropic: return "isotropic";
    case RootClass::NonReflectable: return "nonreflectable";
    case RootClass::Imaginary: return "imaginary";
  }
  return "?";
}

inline Int height(const IntVec& v) {
  Int h = 0;
  for (Int c : v) h = checked_add(h, c);
  return h;
}

inline bool is_nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c >= 0; });
}

inline bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; });
}

inline bool is_positive(const IntVec& v) { return is_nonnegative(v) && !is_zero_vec(v); }

inline IntVec negate(IntVec v) {
  for (auto& c : v) c = -c;
  return v;
}

inline IntVec add(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], b[i]);
  return a;
}

inline IntVec sub(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], -b[i]);
  return a;
}

inline IntVec scale(Int k, IntVec a) {
  for (auto& c : a) c = checked_mul(k, c);
  return a;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline std::vector<std::size_t> support(const IntVec& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

/// Canonical root order: height ascending, then coordinates compared from the last
/// index with larger entries first.
inline bool root_less(const IntVec& a, const IntVec& b) {
  const Int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline void sort_roots(std::vector<IntVec>& v) { std::sort(v.begin(), v.end(), root_less); }

/// Connectedness of supp μ in the graph x ~ y iff a_xy != 0 or a_yx != 0.
inline bool support_connected(const SMatrix& A, const IntVec& mu) {
  auto s = support(mu);
  if (s.empty()) return false;
  std::vector<bool> in(mu.size(), false), seen(mu.size(), false);
  for (auto i : s) in[i] = true;
  std::vector<std::size_t> st{s.front()};
  seen[s.front()] = true;
  std::size_t count = 1;
  while (!st.empty()) {
    std::size_t i = st.back();
    st.pop_back();
    for (std::size_t j = 0; j < mu.size(); ++j)
      if (in[j] && !seen[j] && (!A(i, j).is_zero() || !A(j, i).is_zero())) {
        seen[j] = true;
        ++count;
        st.push_back(j);
      }
  }
  return count == s.size();
}

}  // namespace kms
