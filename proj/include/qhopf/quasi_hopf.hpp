#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/matrix.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

/// Raw structure constants as read from input. Nothing here is checked yet.
struct AlgebraData {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Rational> mult;     ///< n^3, index (i*n + j)*n + k: coefficient of e_k in e_i e_j
  std::vector<Rational> unit;     ///< n
  std::vector<Rational> comult;   ///< n^3, index i*n*n + j*n + k: coefficient of e_j (x) e_k in D(e_i)
  std::vector<Rational> counit;   ///< n
  std::vector<Rational> phi;      ///< n^3, leftmost leg slowest
  std::vector<Rational> phi_inv;  ///< optional
  std::vector<Rational> antipode;      ///< n*n row-major; column c is S(e_c)
  std::vector<Rational> antipode_inv;  ///< optional
  std::vector<Rational> alpha, beta;   ///< n
};

/// Element of the k-fold tensor power of H, dense coefficients.
struct Tensor {
  std::size_t n = 0;
  std::size_t legs = 0;
  std::vector<Rational> c;

  Tensor() = default;
  Tensor(std::size_t n_, std::size_t legs_);
  std::size_t size() const { return c.size(); }
  bool is_zero() const;
  /// Visits nonzero coefficients with their multi-index.
  void for_each(const std::function<void(const std::vector<std::size_t>&, const Rational&)>& fn) const;
  std::size_t flat(const std::vector<std::size_t>& idx) const;
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator*(const Rational& s) const;
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.legs == b.legs && a.c == b.c; }
  std::string str(const std::vector<std::string>& basis) const;
};

/// Structure constants with element arithmetic. May violate the axioms; see
/// verify_axioms and Algebra for the checked form.
class QuasiHopfAlgebra {
 public:
  /// Throws StructureError on size mismatches or malformed data.
  explicit QuasiHopfAlgebra(AlgebraData data);

  const AlgebraData& data() const { return d_; }
  std::size_t dim() const { return d_.dim; }
  const std::string& name() const { return d_.name; }
  const std::vector<std::string>& basis_names() const { return d_.basis; }

  /// e_i e_j as sparse vector.
  const SparseVector& prod(std::size_t i, std::size_t j) const { return prod_[i * d_.dim + j]; }
  /// D(e_i) flat over n*n.
  const SparseVector& coprod(std::size_t i) const { return coprod_[i]; }
  const Rational& counit(std::size_t i) const { return d_.counit[i]; }
  const Matrix& antipode_matrix() const { return s_; }
  /// Empty when S is not invertible.
  const std::optional<Matrix>& antipode_inv_matrix() const { return s_inv_; }

  Tensor one(std::size_t legs = 1) const;
  Tensor element(const std::vector<Rational>& v) const;
  Tensor basis_element(std::size_t i) const;
  Tensor phi() const;
  /// Empty when Phi is not invertible.
  const std::optional<Tensor>& phi_inv() const { return phi_inv_; }
  Tensor alpha() const { return element(d_.alpha); }
  Tensor beta() const { return element(d_.beta); }

  Tensor mul(const Tensor& a, const Tensor& b) const;
  Tensor mul(std::initializer_list<Tensor> fs) const;
  Tensor outer(const Tensor& a, const Tensor& b) const;
  /// Comultiplication on one leg; the result has one more leg.
  Tensor delta(const Tensor& t, std::size_t leg) const;
  Tensor eps(const Tensor& t, std::size_t leg) const;
  Tensor antipode(const Tensor& t, std::size_t leg, bool inverse = false) const;
  /// Inserts the one-leg element x as a new leg at position pos.
  Tensor insert(const Tensor& t, std::size_t pos, const Tensor& x) const;
  /// Multiplies leg pos by leg pos+1 (left times right).
  Tensor merge(const Tensor& t, std::size_t pos) const;
  /// Output leg k is input leg perm[k].
  Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm) const;
  /// Each input leg l is expanded by the left-nested iterated comultiplication
  /// onto the output positions groups[l], in order; unused positions get 1.
  Tensor spread(const Tensor& t, const std::vector<std::vector<std::size_t>>& groups, std::size_t total) const;
  /// Full product of all legs in order.
  Tensor collapse(const Tensor& t) const;

  /// Matrices of left and right multiplication by e_i on the regular module.
  Matrix left_mult(std::size_t i) const;
  Matrix right_mult(std::size_t i) const;
  Matrix left_mult(const Tensor& a) const;
  Matrix right_mult(const Tensor& a) const;

 private:
  AlgebraData d_;
  std::vector<SparseVector> prod_;
  std::vector<SparseVector> coprod_;
  Matrix s_;
  std::optional<Matrix> s_inv_;
  std::optional<Tensor> phi_inv_;
};

/// Checks every defining axiom exactly. Item ids: algebra.*, B1..B4, H1..H4, ...
Report verify_axioms(const QuasiHopfAlgebra& h);

/// Precomputed structure elements used throughout the categorical layer.
struct Formulas {
  Tensor one, alpha, beta;
  Tensor phi, phi_inv;  // 3 legs
  Tensor kappa, kappa_inv, lambda;  // 5 legs
  Tensor eta;        // (f1, f2 b S f3)
  Tensor harpoon;    // (P1, S(P2) a P3); also the inner-hom evaluation
  Tensor in_map;     // (f1, f2, S f3)
  Tensor icomp;      // (P1, S(f1 P2) a f2 P3_1, S(f3 P3_2))
  Tensor diamond;    // (P1_1, S(P2) a P3, P1_2)
  Tensor right_act;  // (k1, S(k2) a k3, S k4, k5)
  Tensor product;    // right_act with counit on the last leg
  Tensor l_map;      // (f1, f2_1, S f3, f2_2)
  Tensor slnko;      // kbar * (l2, l3, l4, l5, l1)
  std::vector<Tensor> heart_act;  // per basis e_i: (h11, S h2, h12)
  Rational eps_alpha;
  bool trivial_phi = false;
};

/// A quasi-Hopf algebra whose axioms have been verified. Cheap to copy.
class Algebra {
 public:
  /// Throws ValidationError carrying the failing report.
  static Algebra validate(QuasiHopfAlgebra h);

  const QuasiHopfAlgebra& qha() const { return *h_; }
  const Formulas& f() const { return *f_; }
  std::size_t dim() const { return h_->dim(); }
  const std::string& name() const { return h_->name(); }
  bool same_as(const Algebra& o) const { return h_ == o.h_; }

 private:
  std::shared_ptr<const QuasiHopfAlgebra> h_;
  std::shared_ptr<const Formulas> f_;
};

/// Derived identities that follow from the axioms; every item must pass on a
/// validated algebra.
Report verify_derived_identities(const Algebra& a);

AlgebraData group_z2();
AlgebraData sweedler_h4();
AlgebraData drinfeld_h2();
std::vector<std::string> builtin_names();
/// Throws std::invalid_argument for unknown names.
AlgebraData builtin(const std::string& name);

}  // namespace qhopf
