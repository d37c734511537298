#pragma once

#include <optional>

#include "kms/exact/matrix.hpp"

namespace kms {

/// Result of deciding whether a scalar is an integer. Zero satisfies both
/// refinements and is reported as `Integer`.
struct Integrality {
  enum class Kind { NotInteger, Integer, NonpositiveInteger, NonnegativeInteger };
  Kind kind = Kind::NotInteger;
  Integer value;

  bool integer() const { return kind != Kind::NotInteger; }
  bool nonpositive() const { return integer() && sgn(value) <= 0; }
  bool nonnegative() const { return integer() && sgn(value) >= 0; }
};

/// Decides integrality exactly. Values depending on a formal parameter or on
/// the algebraic generator are never integers.
inline Integrality integrality_probe(const Scalar& s) {
  Integrality r;
  if (!s.is_rational() || !is_integral(s.rational())) return r;
  r.value = s.rational().get_num();
  const int sg = sgn(r.value);
  r.kind = sg == 0 ? Integrality::Kind::Integer
                   : (sg < 0 ? Integrality::Kind::NonpositiveInteger : Integrality::Kind::NonnegativeInteger);
  return r;
}

}  // namespace kms
