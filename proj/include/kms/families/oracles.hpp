#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "kms/groupoid/graph.hpp"

namespace kms {

/// Word models for spines. Marks are 0-based: position i (1-based) is mark i-1.
namespace oracle {

inline std::vector<std::string> words(std::size_t m, std::size_t n) {
  std::string w = std::string(m, 'e') + std::string(n, 'd');
  std::sort(w.begin(), w.end());
  std::vector<std::string> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Words in m letters ε and n letters δ, edges swap adjacent distinct letters.
/// Spine of A(m-1|n-1) and of B(m|n).
inline SimpleGraph swap_words(std::size_t m, std::size_t n, std::size_t marks) {
  auto ws = words(m, n);
  std::map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < ws.size(); ++i) id[ws[i]] = i;
  SimpleGraph g;
  g.adj.assign(ws.size(), std::vector<std::optional<std::size_t>>(marks));
  for (std::size_t u = 0; u < ws.size(); ++u)
    for (std::size_t i = 0; i + 1 < ws[u].size(); ++i) {
      if (ws[u][i] == ws[u][i + 1]) continue;
      std::string w = ws[u];
      std::swap(w[i], w[i + 1]);
      g.adj[u][i] = id[w];
    }
  return g;
}

inline SimpleGraph spine_A(std::size_t m, std::size_t n) { return swap_words(m + 1, n + 1, m + n + 1); }
inline SimpleGraph spine_B(std::size_t m, std::size_t n) { return swap_words(m, n, m + n); }

/// D(m|n): a word ending in δ carries a sign; signs never meet; the swap of the last
/// two positions joins an unsigned word to +w by r_{m+n-1} and to -w by r_{m+n}.
inline SimpleGraph spine_D(std::size_t m, std::size_t n) {
  const std::size_t L = m + n;
  std::vector<std::pair<std::string, int>> vs;
  for (const auto& w : words(m, n)) {
    if (w.back() == 'd') {
      vs.push_back({w, 1});
      vs.push_back({w, -1});
    } else {
      vs.push_back({w, 0});
    }
  }
  std::map<std::pair<std::string, int>, std::size_t> id;
  for (std::size_t i = 0; i < vs.size(); ++i) id[vs[i]] = i;
  SimpleGraph g;
  g.adj.assign(vs.size(), std::vector<std::optional<std::size_t>>(L));
  for (std::size_t u = 0; u < vs.size(); ++u) {
    const auto& [w, s] = vs[u];
    for (std::size_t i = 0; i + 1 < L; ++i) {
      if (w[i] == w[i + 1]) continue;
      std::string v = w;
      std::swap(v[i], v[i + 1]);
      if (i + 2 < L) {
        g.adj[u][i] = id[{v, s}];
      } else if (s != 0) {
        g.adj[u][s > 0 ? L - 2 : L - 1] = id[{v, 0}];
      } else {
        g.adj[u][L - 2] = id[{v, 1}];
        g.adj[u][L - 1] = id[{v, -1}];
      }
    }
  }
  return g;
}

/// Path v_{-n} .. v_n with marks r_1, …, r_n, r_{n+1}, r_{n-1}, …, r_1.
inline std::vector<std::size_t> marks_C(std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i <= n + 1; ++i) s.push_back(i - 1);
  for (std::size_t i = n - 1; i >= 1; --i) s.push_back(i - 1);
  return s;
}

inline SimpleGraph path(const std::vector<std::size_t>& marks, std::size_t nmarks) {
  SimpleGraph g;
  g.adj.assign(marks.size() + 1, std::vector<std::optional<std::size_t>>(nmarks));
  for (std::size_t i = 0; i < marks.size(); ++i) g.connect(i, i + 1, marks[i]);
  return g;
}

inline SimpleGraph spine_C(std::size_t n) { return path(marks_C(n), n + 1); }

/// Star: the base vertex joined to three leaves by r_1, r_2, r_3.
inline SimpleGraph spine_Q() {
  SimpleGraph g;
  g.adj.assign(4, std::vector<std::optional<std::size_t>>(3));
  for (std::size_t x = 0; x < 3; ++x) g.connect(0, x + 1, x);
  return g;
}

/// One period of the C(n+1)^(1) line read from v_{-2n} to v_{2n}, marks x_0..x_{n+1}:
/// left of v_0 the marks are r_n, …, r_2, r_0, r_1, …, r_n and right of v_0
/// r_{n+1}, r_{n-1}, …, r_1, r_0, r_2, …, r_{n-1}, r_{n+1}.
inline std::vector<std::size_t> left_marks_C_affine(std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = n; i >= 2; --i) s.push_back(i);
  s.push_back(0);
  for (std::size_t i = 1; i <= n; ++i) s.push_back(i);
  return s;
}
inline std::vector<std::size_t> right_marks_C_affine(std::size_t n) {
  std::vector<std::size_t> s{n + 1};
  for (std::size_t i = n - 1; i >= 1; --i) s.push_back(i);
  s.push_back(0);
  for (std::size_t i = 2; i + 1 <= n; ++i) s.push_back(i);
  s.push_back(n + 1);
  return s;
}

inline Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer spine_size_A(std::size_t m, std::size_t n) { return binom(m + n + 2, m + 1); }
inline Integer skeleton_size_A(std::size_t m, std::size_t n) { return factorial(m + n + 2); }
inline Integer spine_size_B(std::size_t m, std::size_t n) { return binom(m + n, m); }
inline Integer skeleton_size_B(std::size_t m, std::size_t n) {
  return Integer(Integer(1) << static_cast<mp_bitcnt_t>(m + n)) * factorial(m + n);
}
inline Integer spine_size_D(std::size_t m, std::size_t n) {
  return binom(m + n, m) + (m + n >= 1 ? binom(m + n - 1, m) : Integer(0));
}
inline Integer skeleton_size_D(std::size_t m, std::size_t n) {
  return Integer(Integer(1) << static_cast<mp_bitcnt_t>(m + n - 1)) * Integer(static_cast<unsigned long>(m + 2 * n)) *
         factorial(m + n - 1);
}

}  // namespace oracle
}  // namespace kms
