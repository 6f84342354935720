#pragma once

#include <map>
#include <vector>

#include "unicas/exact/polynomial.hpp"
#include "unicas/exact/rational.hpp"
#include "unicas/exact/symmetric.hpp"
#include "unicas/vogel/vogel.hpp"

namespace unicas::vogel {

/// Class function on S_m keyed by cycle type (weakly decreasing parts).
using Character = std::map<std::vector<int>, Rational>;

Character trivial_character(int m);
Character sign_character(int m);

/// Trace of C2 on [R]V = Hom_{S_m}(R, V^{(x)m}):
///   (1/m!) sum_sigma chi(sigma) m(sigma) dim(V)^{cycles(sigma)-1} Tr(C2, V)
/// with m(sigma) the sum of squared cycle lengths. Throws
/// std::invalid_argument when the character misses a cycle type.
Rational deligne_rhs(const Rational& dim_v, const Rational& trace_c2_v, const Character& character, int m);

/// [sum_slots dim Y2(slot) (4t - 2 slot)] - (2 + dim g) dim g 2t.
/// Throws PoleError where a Y2 dimension is singular.
Rational deligne_s2_check(const VogelPoint& p);

/// dim g 2t + dim X2 4t - (dim g - 2) dim g 2t with dim X2 = dim g (dim g - 3)/2,
/// the sign-character instance for the exterior square.
Rational deligne_lambda2_check(const VogelPoint& p);

/// The S2 residual with all denominators cleared, as a polynomial in the
/// symbols alpha, beta, gamma. Identically zero iff the identity holds on
/// the whole plane.
Polynomial deligne_s2_cleared();

}  // namespace unicas::vogel
