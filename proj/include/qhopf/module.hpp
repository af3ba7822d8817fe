#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

/// Finite-dimensional left H-module given by the matrices of the basis.
/// Cheap to copy.
class HModule {
 public:
  HModule() = default;
  /// Verifies the representation axioms; throws ValidationError.
  static HModule create(const Algebra& alg, std::vector<Matrix> action, std::string name = {});
  /// Trusted construction for modules built from already valid data.
  static HModule unchecked(const Algebra& alg, std::vector<Matrix> action, std::string name = {});

  const Algebra& algebra() const { return d_->alg; }
  std::size_t dim() const { return d_->dim; }
  const Matrix& act(std::size_t i) const { return d_->action.at(i); }
  const std::vector<Matrix>& action() const { return d_->action; }
  /// Action of a one-leg element.
  Matrix act(const Tensor& h) const;
  const std::string& name() const { return d_->name; }
  Report verify() const;
  bool same_as(const HModule& o) const { return d_ == o.d_; }
  /// Same dimension and identical action matrices.
  bool equals(const HModule& o) const;

 private:
  struct Data {
    Algebra alg;
    std::size_t dim = 0;
    std::vector<Matrix> action;
    std::string name;
  };
  std::shared_ptr<const Data> d_;
};

HModule unit_module(const Algebra& alg);
HModule regular_module(const Algebra& alg);
HModule tensor(const HModule& m, const HModule& n);

/// Action of a k-leg element on M1 (x) ... (x) Mk.
Matrix act_element(const Tensor& t, const std::vector<HModule>& mods);

/// H-linear map with explicit endpoints.
struct HMap {
  HModule src, tgt;
  Matrix m;
};

HMap make_map(const HModule& src, const HModule& tgt, Matrix m);
bool is_h_linear(const HMap& f);
HMap identity(const HModule& m);
/// g after f.
HMap compose(const HMap& g, const HMap& f);
HMap tensor(const HMap& f, const HMap& g);

/// (M (x) N) (x) P -> M (x) (N (x) P), the action of Phi.
HMap associator(const HModule& m, const HModule& n, const HModule& p);
HMap associator_inv(const HModule& m, const HModule& n, const HModule& p);

/// Basis of {f : f A_k = B_k f for all k}, each f a (dim_b x dim_a) matrix.
std::vector<Matrix> intertwiners(const std::vector<Matrix>& ops_a, const std::vector<Matrix>& ops_b,
                                 std::size_t dim_a, std::size_t dim_b);
std::vector<Matrix> hom_space(const HModule& m, const HModule& n);

/// Inner hom Lin(M, N), basis E_ij with flat index i*dim(M) + j.
HModule inner_hom(const HModule& m, const HModule& n);
/// Row-major flattening of a linear map into a vector of the inner hom.
SparseVector vec_of(const Matrix& f);
Matrix mat_of(const SparseVector& v, std::size_t rows, std::size_t cols);

/// M -> [P, M (x) P]
HMap inner_eta(const HModule& m, const HModule& p);
/// [P, N] (x) P -> N
HMap inner_eps(const HModule& n, const HModule& p);
/// [Y, Z] (x) [X, Y] -> [X, Z]
HMap inner_compose(const HModule& x, const HModule& y, const HModule& z);
/// M (x) [X, Y] -> [X, M (x) Y]
HMap inner_in_map(const HModule& m, const HModule& x, const HModule& y);
/// [P, M] -> [P, N] by post-composition with f : M -> N
HMap inner_post(const HModule& p, const HMap& f);

Report verify_adjunction(const HModule& m, const HModule& p);
Report verify_inner_compose(const HModule& x, const HModule& y, const HModule& z);
Report verify_in_map(const HModule& m, const HModule& x, const HModule& y);

struct Dual {
  HModule obj;
  HMap ev, coev;
};
/// M* with ev : M* (x) M -> I and coev : I -> M (x) M*.
Dual left_dual(const HModule& m);
/// *M with ev : M (x) *M -> I and coev : I -> *M (x) M.
Dual right_dual(const HModule& m);
Report verify_duals(const HModule& m);

struct EndResult {
  HModule ambient;          ///< [C, P (x) C (x) Q]
  Matrix basis;             ///< columns span the end inside the ambient
  Matrix closed_form;       ///< columns l_t for t in P (x) H (x) Q
  Report report;
};
/// End of T -> [T, P (x) T (x) Q] restricted to the regular module.
EndResult end_over_regular(const HModule& p, const HModule& q);

}  // namespace qhopf
