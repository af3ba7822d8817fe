#pragma once

#include "qhopf/module.hpp"

namespace qhopf {

/// Object of the center: an H-module with a coaction M -> H (x) M whose
/// induced half-braiding c_{M,X}(m (x) x) = m_{-1} x (x) m_0 satisfies the
/// center axioms.
class CenterObject {
 public:
  CenterObject() = default;
  /// Runs validate_center and throws ValidationError on failure.
  static CenterObject create(HModule base, Matrix coaction);
  static CenterObject unchecked(HModule base, Matrix coaction);

  const HModule& base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }
  const Algebra& algebra() const { return base_.algebra(); }
  /// (n*d) x d; column j is the coaction of e_j with index h*d + k.
  const Matrix& coaction() const { return coaction_; }
  /// d x d block of the coaction belonging to the basis element e_h.
  Matrix component(std::size_t h) const;

 private:
  HModule base_;
  Matrix coaction_;
};

/// M (x) X -> X (x) M
HMap braiding(const CenterObject& m, const HModule& x);
HMap braiding_inv(const CenterObject& m, const HModule& x);
Report validate_center(const CenterObject& m);

CenterObject unit_center(const Algebra& alg);
/// Coaction 1 (x) m. Only a center object for special algebras; validate it.
CenterObject trivial_center(const HModule& m);
/// C with coaction h -> h_(1) S(h_(3)) (x) h_(2). Validate before use.
CenterObject regular_center(const Algebra& alg);
/// Coaction read off a half-braiding against the regular module.
Matrix coaction_from_braiding(const Matrix& beta_c, std::size_t dim, const Algebra& alg);
CenterObject tensor_center(const CenterObject& m, const CenterObject& n);

std::vector<Matrix> center_hom_space(const CenterObject& m, const CenterObject& n);
bool is_center_morphism(const CenterObject& m, const CenterObject& n, const Matrix& f);

}  // namespace qhopf
