#pragma once

#include "qhopf/center.hpp"

namespace qhopf {

/// The object H (x) M with action h(a (x) m) = h_(1)(1) a S(h_(2)) (x) h_(1)(2) m.
HModule heart_module(const HModule& m);
/// Right A-action (a (x) m) . b on the heart of M.
HMap heart_right_action(const HModule& m);
/// Heart of a morphism: id_H (x) f.
HMap heart_map(const HMap& f);
/// heart(M) (x) X -> X (x) M
HMap diamond(const HModule& m, const HModule& x);
/// A (x) X -> X
HMap harpoon(const HModule& x);
/// heart(M) -> M, a (x) m -> e(a alpha) m
HMap pi_map(const HModule& m);

/// Bilinear map (a, v) -> rho(e_l a e_r) v summed over a two-leg element;
/// columns indexed a * dim(X) + v.
Matrix sandwich_action(const Tensor& lr, const HModule& x);

/// Columns a*n + b hold the sum over the terms of t of c * e_1 a e_2 b e_3.
Matrix bilinear_product(const QuasiHopfAlgebra& q, const Tensor& t);

/// The algebra A = heart(I) in the center.
struct AlgebraA {
  HModule obj;
  CenterObject center;
  HMap product;  ///< A (x) A -> A
  HMap unit;     ///< I -> A
  HMap counit;   ///< A -> I
};
AlgebraA algebra_a(const Algebra& alg);
Report verify_algebra_a(const Algebra& alg);

struct NatResult {
  HMap g;
  Report report;
};
/// Turns the component at T = C of a natural family
///   f_T : X (x) T -> Y (x) (T (x) K)
/// into the unique g : X -> Y (x) heart(K) with f = hom_to_nat(g).
NatResult nat_to_hom(const HModule& x, const HModule& y, const HModule& k, const Matrix& f_at_c);
/// (id_Y (x) diamond_{K,T}) o a_{Y,heart K,T} o (g (x) id_T)
Matrix hom_to_nat(const HMap& g, const HModule& y, const HModule& k, const HModule& t);

/// heart(M) (x) heart(N) -> heart(M (x) N)
NatResult heart_compose(const HModule& m, const HModule& n);
/// Right-hand side of the action law for diamond at T, as a map
/// (heart M (x) heart N) (x) T -> T (x) (M (x) N).
Matrix diamond_action_chain(const HModule& m, const HModule& n, const HModule& t);

/// heart(M) (x) X -> X (x) heart(M) obtained from the universal property.
NatResult heart_braiding(const HModule& m, const HModule& x);
/// heart(M) with the coaction read off heart_braiding against C.
CenterObject heart_center(const HModule& m);

/// s : heart(M) -> M (x) A and t : M (x) A -> heart(M) for M in the center.
struct StIsos {
  HMap s, t;
  Report report;
};
/// Both are read off the universal property; the report checks that they are
/// mutually inverse, right A-linear and center morphisms.
StIsos s_t_isos(const CenterObject& m);

/// Whether (right action) o braiding(A, heart M) equals the left product
/// A (x) heart(M) -> heart(M). Holds for M = I; informational otherwise.
bool heart_reversed_commutativity(const HModule& m);

/// Checks diamond and harpoon laws, heart_compose cross-checks and
/// the Hopf closed forms when the associator is trivial.
Report verify_heart(const HModule& m);

}  // namespace qhopf
