#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kms/exact/matrix.hpp"

namespace kms {

enum class GcmType { Fin, Aff, Ind };

inline const char* gcm_type_name(GcmType t) {
  switch (t) {
    case GcmType::Fin: return "Fin";
    case GcmType::Aff: return "Aff";
    case GcmType::Ind: return "Ind";
  }
  return "?";
}

struct GcmBlock {
  std::vector<std::size_t> indices;
  GcmType type;
};

struct GcmReport {
  GcmType type = GcmType::Fin;  // worst block: Ind > Aff > Fin
  std::vector<GcmBlock> blocks;
  bool decomposable() const { return blocks.size() > 1; }
};

inline bool is_gcm(const IntMatrix& B) {
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (i == j) {
        if (B(i, j) != 2) return false;
      } else if (B(i, j) > 0 || ((B(i, j) == 0) != (B(j, i) == 0))) {
        return false;
      }
    }
  return true;
}

namespace detail {

inline Rational minor(const IntMatrix& B, const std::vector<std::size_t>& idx) {
  QMatrix m(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = Rational(static_cast<long>(B(idx[i], idx[j])));
  return determinant(m);
}

/// Type of an indecomposable GCM via principal minors.
inline GcmType indecomposable_type(const IntMatrix& B, const std::vector<std::size_t>& idx) {
  const std::size_t n = idx.size();
  bool proper_positive = true;
  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) sub.push_back(idx[i]);
    if (sgn(minor(B, sub)) <= 0) {
      proper_positive = false;
      break;
    }
  }
  const int full = sgn(minor(B, idx));
  if (proper_positive && full > 0) return GcmType::Fin;
  if (proper_positive && full == 0) return GcmType::Aff;
  return GcmType::Ind;
}

}  // namespace detail

/// Fin / Aff / Ind type of a generalized Cartan matrix, block by block.
inline GcmReport gcm_type(const IntMatrix& B) {
  if (!is_gcm(B)) fail(ErrorCode::NotAGCM, "matrix is not a generalized Cartan matrix");
  const std::size_t n = B.rows();
  GcmReport r;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> block, st{s};
    seen[s] = true;
    while (!st.empty()) {
      std::size_t i = st.back();
      st.pop_back();
      block.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && B(i, j) != 0) {
          seen[j] = true;
          st.push_back(j);
        }
    }
    std::sort(block.begin(), block.end());
    GcmType t = detail::indecomposable_type(B, block);
    r.blocks.push_back({block, t});
    if (static_cast<int>(t) > static_cast<int>(r.type)) r.type = t;
  }
  return r;
}

}  // namespace kms
