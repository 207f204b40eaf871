#pragma once

#include "grt2/poly.hpp"
#include "grt2/theta_complex.hpp"

#include <vector>

namespace grt2 {

// ad_x^n(y) = sum_u (-1)^u C(n,u) x^{n-u} y x^u, with ad_x(y) = xy - yx.
NCPoly ad_power(int n);

// The derivation D_psi with x -> 0 and y -> [y, psi] = y psi - psi y.
NCPoly apply_derivation(const NCPoly& psi, const NCPoly& w);

// {a, b} = D_a b - D_b a + [a, b]
NCPoly ihara_bracket(const NCPoly& a, const NCPoly& b);

// Depth-2 words x^u y x^v y x^w -> alpha^u beta^v gamma^w; other words dropped.
Poly3 depth2_encode(const NCPoly& p);

// G = sum a_i (alpha - beta)^{2i} (beta - gamma)^{k-2-2i} over the full range
// 1 <= i <= (k-4)/2, where full[i-1] = a_i.
Poly3 schneps_polynomial(int k, const std::vector<Rational>& full);

// Extends reduced coefficients by a_{k/2-1-i} = -a_i; an index fixed by that
// map (k = 0 mod 4) gets coefficient 0.
std::vector<Rational> extend_antisymmetric(int k, const std::vector<Rational>& reduced);

// True iff G + (13).G = 0 and G + (123).G + (132).G = 0 under the plain action.
// Throws std::invalid_argument for odd k.
bool schneps_check_full(int k, const std::vector<Rational>& full);
bool schneps_check(const RelationVector& r);

// Kernel of a -> sum a_i depth2_encode({ad^{2i}(y), ad^{k-2-2i}(y)}) over the
// reduced index range, normalized like relation_space.
std::vector<RelationVector> bracket_kernel(int k);

}  // namespace grt2
