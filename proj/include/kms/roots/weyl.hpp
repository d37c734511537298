#pragma once

#include <map>
#include <vector>

#include "kms/roots/principal.hpp"

namespace kms {

/// w = s_{word[0]} … s_{word[k-1]} acting on Σ_v coordinates.
struct WeylElement {
  std::vector<std::size_t> word;
  IntMatrix matrix;

  std::size_t length() const { return word.size(); }
  IntVec apply(const IntVec& v) const { return mul(matrix, v); }
};

struct WeylEnumeration {
  std::vector<WeylElement> elements;  // by length, then discovery order
  std::size_t max_length = 0;
  bool exhausted = false;  // no element of length max_length + 1 exists

  std::optional<std::size_t> find(const IntMatrix& m) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i].matrix == m) return i;
    return std::nullopt;
  }
};

inline WeylElement weyl_from_word(const PrincipalData& pd, const std::vector<std::size_t>& word) {
  WeylElement w{word, IntMatrix::identity(pd.rank)};
  for (std::size_t i : word) w.matrix = mul(w.matrix, pd.reflection(i));
  return w;
}

/// Inversion roots β_j = s_{i_1} … s_{i_{j-1}}(π_{i_j}) of a word.
inline std::vector<IntVec> inversion_roots(const PrincipalData& pd, const std::vector<std::size_t>& word) {
  std::vector<IntVec> out;
  IntMatrix prefix = IntMatrix::identity(pd.rank);
  for (std::size_t i : word) {
    out.push_back(mul(prefix, pd.pi[i]));
    prefix = mul(prefix, pd.reflection(i));
  }
  return out;
}

/// A word is reduced iff all its inversion roots are positive; they are then distinct.
inline bool is_reduced(const PrincipalData& pd, const std::vector<std::size_t>& word) {
  auto inv = inversion_roots(pd, word);
  RootSet seen;
  for (const auto& b : inv)
    if (!is_positive(b) || !seen.insert(b).second) return false;
  return true;
}

/// All elements of length <= max_length, breadth-first by right multiplication.
inline WeylEnumeration weyl_generate(const PrincipalData& pd, std::size_t max_length) {
  WeylEnumeration e;
  e.max_length = max_length;
  std::map<std::vector<Int>, std::size_t> seen;
  e.elements.push_back({{}, IntMatrix::identity(pd.rank)});
  seen.emplace(e.elements[0].matrix.data(), 0);
  std::size_t begin = 0, end = 1;
  for (std::size_t len = 0;; ++len) {
    const bool last = len == max_length;
    std::size_t added = 0;
    for (std::size_t k = begin; k < end; ++k)
      for (std::size_t i = 0; i < pd.size(); ++i) {
        IntMatrix m = mul(e.elements[k].matrix, pd.reflection(i));
        if (seen.count(m.data())) continue;
        if (last) return e;  // something longer exists
        auto word = e.elements[k].word;
        word.push_back(i);
        if (!is_reduced(pd, word)) fail(ErrorCode::Internal, "shortest word failed the inversion-set check");
        seen.emplace(m.data(), e.elements.size());
        e.elements.push_back({std::move(word), std::move(m)});
        ++added;
      }
    if (added == 0) {
      e.exhausted = true;
      return e;
    }
    begin = end;
    end = e.elements.size();
  }
}

}  // namespace kms
