#pragma once

#include <functional>

#include "kms/exact/smith.hpp"
#include "kms/roots/positive.hpp"

namespace kms {

enum class ParityType { I, II };

inline const char* parity_type_name(ParityType t) { return t == ParityType::I ? "I" : "II"; }

struct Classification {
  GcmReport gcm;
  GcmType type = GcmType::Fin;
  ParityType parity_type = ParityType::II;
  LatticeQuotient quotient;          // Q_v / Q_0
  std::vector<IntVec> q0_generators;
  Int imaginary_height = 0;          // window searched for even imaginary roots
};

/// Positive vectors of height exactly h, in lexicographic order.
inline void for_each_of_height(std::size_t n, Int h, const std::function<void(const IntVec&)>& f) {
  IntVec v(n, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i + 1 == n) {
      v[i] = left;
      f(v);
      return;
    }
    for (Int c = left; c >= 0; --c) {
      v[i] = c;
      rec(i + 1, left - c);
    }
  };
  if (n > 0) rec(0, h);
}

/// (Fin | Aff | Ind) from B_π and type I/II from Q_v / Q_0, where Q_0 is generated by π,
/// the even simple roots at spine vertices and the even imaginary roots of height <= imaginary_height.
inline Classification classify_component(const PrincipalData& pd, const MarkedGraph& spine,
                                         Int imaginary_height = -1) {
  const Vertex& v = spine.vertices.at(0);
  if (!indecomposable(v.base->A)) fail(ErrorCode::Decomposable, "the Cartan matrix is decomposable");
  Classification c;
  if (pd.size() > 0) {
    c.gcm = gcm_type(pd.b_pi);
    c.type = c.gcm.type;
  }
  std::set<IntVec> gens(pd.pi.begin(), pd.pi.end());
  for (const auto& u : spine.vertices)
    for (std::size_t x = 0; x < u.size(); ++x)
      if (!u.cartan.odd(x)) gens.insert(u.root(x));
  if (imaginary_height < 0) imaginary_height = std::max<Int>(10, 2 * static_cast<Int>(pd.rank) + 2);
  c.imaginary_height = imaginary_height;
  if (c.type != GcmType::Fin && kac_moody_component(spine)) {
    for (Int h = 1; h <= imaginary_height; ++h)
      for_each_of_height(pd.rank, h, [&](const IntVec& mu) {
        if (root_parity(*v.base, mu) == 0 && is_imaginary(pd, spine, mu)) gens.insert(mu);
      });
  }
  c.q0_generators.assign(gens.begin(), gens.end());
  c.quotient = lattice_quotient(pd.rank, c.q0_generators);
  c.parity_type = c.quotient.is_z() ? ParityType::I : ParityType::II;
  return c;
}

}  // namespace kms
