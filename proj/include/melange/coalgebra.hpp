#pragma once

#include <span>

#include "melange/shuffle.hpp"
#include "melange/tensor.hpp"

namespace melange {

/// Deconcatenation coproduct: w -> sum over all splittings uv = w of
/// u (x) v (|w|+1 terms, coefficient 1 each).
Tensor2 delta_conc(const Word& w);

/// Linear extension to polynomials.
Tensor2 delta_conc(const NcPoly& p);

/// Proper splittings only (u, v both nonempty).
Tensor2 delta_conc_plus(const Word& w);

/// n-fold iterate of the proper coproduct applied to the first tensor
/// slot, flattened. Returns the number of surviving terms; 0 certifies
/// the n-th iterate vanished (local nilpotency at n = |w|).
std::size_t delta_conc_plus_iterate_terms(const Word& w, int n);

/// Letter-transpose coproduct of the law:
///   Delta(z) = z (x) 1 + 1 (x) z + sum gamma_{x,y}^z x (x) y
/// extended multiplicatively (componentwise concatenation) over the
/// letters of w. Structure constants are enumerated inside the window;
/// laws analytically flagged non-dualizable are refused with a
/// SemanticError naming the offending letter.
Tensor2 delta_phi(const Word& w, const PhiLaw& law,
                  std::span<const Letter> window);

/// <T | u (x) v>.
Rational pairing(const Tensor2& t, const Word& u, const Word& v);

/// <u *_phi v | w> == <u (x) v | Delta_phi(w)>.
bool duality_check(const Word& u, const Word& v, const Word& w,
                   const PhiLaw& law, std::span<const Letter> window,
                   ShuffleCache* cache = nullptr);

/// Componentwise phi-shuffle product on the tensor square.
Tensor2 tensor_mul_phi(const Tensor2& a, const Tensor2& b, const PhiLaw& law,
                       ShuffleCache* cache = nullptr);

/// Delta_conc(w1 *_phi w2) == Delta_conc(w1) . Delta_conc(w2), the right
/// side multiplied componentwise by the phi-shuffle. Meaningful for
/// associative-commutative laws.
bool bialgebra_check(const Word& w1, const Word& w2, const PhiLaw& law,
                     ShuffleCache* cache = nullptr);

/// The constant-term character eps(P) = <P | 1>.
Rational counit(const NcPoly& p);

} // namespace melange
