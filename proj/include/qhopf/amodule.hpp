#pragma once

#include "qhopf/heart.hpp"

namespace qhopf {

/// Right A-module in the center: a center object M with mu : M (x) A -> M.
class AModule {
 public:
  AModule() = default;
  /// Runs validate_amodule and throws ValidationError on failure.
  static AModule create(CenterObject center, Matrix mu);
  static AModule unchecked(CenterObject center, Matrix mu);

  const CenterObject& center() const { return center_; }
  const HModule& base() const { return center_.base(); }
  const Algebra& algebra() const { return center_.algebra(); }
  std::size_t dim() const { return center_.dim(); }
  /// d x (d*n), column m*n + b.
  const Matrix& mu() const { return mu_; }
  HMap action() const;
  /// Right multiplication by the basis element e_b of A.
  Matrix right(std::size_t b) const;

 private:
  CenterObject center_;
  Matrix mu_;
};

Report validate_amodule(const AModule& m);

/// A (x) M -> M, mu o braiding(M, A)^-1. M crosses over A.
HMap left_action(const AModule& m);
/// Left action law, unit and commutation with the right action.
Report verify_left_action(const AModule& m);

/// Z (x) A with mu = (id (x) product) o a.
AModule free_amodule(const CenterObject& z);
/// heart(X) with the coaction from the universal property.
AModule heart_amodule(const HModule& x);
/// A over itself.
AModule algebra_amodule(const Algebra& alg);

/// Quotient of an ambient module by the image of a relation map.
struct Quotient {
  HModule ambient;
  Matrix projection;
  Matrix section;
};

struct TensorOverA {
  AModule obj;
  Quotient q;
  Report report;
};
/// Cokernel of mu_M (x) id - (id (x) left_N) o a : (M (x) A) (x) N -> M (x) N.
TensorOverA tensor_over_a(const AModule& m, const AModule& n);

struct Bud {
  HModule obj;
  Quotient q;  ///< projection is p_M
  Report report;
};
/// M (x)_A I, the cokernel of mu - id (x) e_A.
Bud budzogan(const AModule& m);
/// p_N f s_M for an A-module map f : M -> N.
HMap budzogan_map(const Bud& bm, const Bud& bn, const Matrix& f);

struct IsoResult {
  HMap map, inverse;
  Report report;
};
/// bud(M) (x) bud(N) -> bud(M (x)_A N)
IsoResult budzogan_monoidal(const AModule& m, const AModule& n);
/// bud(heart X) -> X induced by pi.
IsoResult counit_iso(const HModule& x);
/// Both windows of the comparison between heart(X) and the free module X (x) A.
Report verify_exactness_diagram(const HModule& x);

struct UnitIso {
  Bud bud;
  AModule heart_bud;  ///< heart(bud M)
  HMap xi;            ///< heart(bud M) -> M
  HMap zeta;          ///< M -> heart(bud M)
  Report report;
};
UnitIso unit_iso(const AModule& m);

/// heart(X) (x)_A heart(Y) -> heart(X (x) Y) induced by heart_compose.
IsoResult descended_compose(const HModule& x, const HModule& y);

/// Basis of maps that are H-linear, colinear and right A-linear.
std::vector<Matrix> amodule_hom_space(const AModule& m, const AModule& n);
bool is_amodule_morphism(const AModule& m, const AModule& n, const Matrix& f);

/// Yetter-Drinfeld compatibility, H-linearity of mu and colinearity of mu,
/// written with the Hopf-algebra closed forms. Requires a trivial associator.
Report hopf_conditions(const AModule& m);

/// Per-object and per-pair checks of the equivalence between H-modules and A.
Report equivalence_report(const Algebra& alg, const std::vector<HModule>& objects);

}  // namespace qhopf
