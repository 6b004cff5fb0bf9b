#include "sswme/model.hpp"

#include <stdexcept>

namespace sswme {

Model::Model(SplineBasis basis, PhysicalParams params, bool regularized)
    : basis_(std::move(basis)),
      tensors_(compute_tensors(basis_)),
      transform_(basis_transform(basis_)),
      params_(params),
      regularized_(regularized),
      n_(basis_.size()) {
  name_ = (regularized_ ? "HSSWME-" : "SSWME-") + basis_.kind;
}

Primitive Model::primitive(const StateVec& u) const {
  if (u.size() != dim()) throw std::invalid_argument("state dimension mismatch");
  const double h = u(0);
  if (!(h > 0.0)) throw std::domain_error("nonpositive water height");
  Primitive p;
  p.h = h;
  p.u_m = u(1) / h;
  p.s = u.tail(n_) / h;
  return p;
}

StateVec Model::flux(const StateVec& u) const {
  const Primitive p = primitive(u);
  StateVec f(dim());
  f(0) = u(1);
  f(1) = p.h * p.u_m * p.u_m + 0.5 * params_.g * p.h * p.h +
         p.h * p.s.dot(tensors_.M * p.s);
  for (int i = 0; i < n_; ++i)
    f(2 + i) = 2.0 * p.h * p.u_m * p.s(i) + p.h * p.s.dot(tensors_.Ahat[i] * p.s);
  return f;
}

Eigen::MatrixXd Model::nonconservative_matrix(const StateVec& u) const {
  const Primitive p = primitive(u);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(dim(), dim());
  // The coefficient of d(h s_l)/dx in moment row i is u_m M_il - B_ilk s_k
  // (mass inverse applied); B is contracted with s over its last index.
  for (int i = 0; i < n_; ++i) {
    q(2 + i, 2 + i) += p.u_m;
    for (int l = 0; l < n_; ++l)
      q(2 + i, 2 + l) -= tensors_.Bhat[i].row(l).dot(p.s);
  }
  return q;
}

StateVec Model::friction_source(const StateVec& u, double x) const {
  const Primitive p = primitive(u);
  const double nu = params_.nu;
  const double bottom_u = p.u_m + tensors_.V0.dot(p.s);

  StateVec src = StateVec::Zero(dim());
  src(1) = -(nu / params_.lambda) * bottom_u;
  if (params_.bottom_slope) src(1) -= params_.g * p.h * params_.bottom_slope(x);
  src.tail(n_) = -(nu / params_.lambda) * bottom_u * tensors_.V0hat -
                 (nu / p.h) * (tensors_.Chat * p.s);
  return src;
}

Eigen::MatrixXd Model::system_matrix(const StateVec& u) const {
  const Primitive p = primitive(u);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim(), dim());
  a(0, 1) = 1.0;
  a(1, 0) = params_.g * p.h - p.u_m * p.u_m - p.s.dot(tensors_.M * p.s);
  a(1, 1) = 2.0 * p.u_m;
  a.row(1).tail(n_) = 2.0 * (tensors_.M * p.s).transpose();
  for (int i = 0; i < n_; ++i) {
    a(2 + i, 0) = -2.0 * p.u_m * p.s(i) - p.s.dot(tensors_.Ahat[i] * p.s);
    a(2 + i, 1) = 2.0 * p.s(i);
    a(2 + i, 2 + i) += p.u_m;
    for (int l = 0; l < n_; ++l)
      a(2 + i, 2 + l) +=
          (tensors_.Bhat[i].row(l).transpose() + 2.0 * tensors_.Ahat[i].col(l))
              .dot(p.s);
  }
  return a;
}

double Model::alpha1(const StateVec& u) const {
  const Primitive p = primitive(u);
  return transform_.alpha_row.dot(p.s);
}

double Model::alpha2(const StateVec& u) const {
  const Primitive p = primitive(u);
  return transform_.alpha2_row.dot(p.s);
}

StateVec Model::regularize_state(const StateVec& u) const {
  const Primitive p = primitive(u);
  const double a1 = transform_.alpha_row.dot(p.s);
  StateVec v(dim());
  v(0) = u(0);
  v(1) = u(1);
  v.tail(n_) = p.h * a1 * transform_.linear_profile;
  return v;
}

Eigen::MatrixXd Model::regularized_system_matrix(const StateVec& u) const {
  return system_matrix(regularize_state(u));
}

Eigen::MatrixXd Model::transport_matrix(const StateVec& u) const {
  return regularized_ ? regularized_system_matrix(u) : system_matrix(u);
}

Eigen::MatrixXd Model::friction_matrix(double h) const {
  if (!(h > 0.0)) throw std::domain_error("nonpositive water height");
  const double nu = params_.nu;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n_ + 1, n_ + 1);
  g(0, 0) = nu / params_.lambda;
  g.row(0).tail(n_) = (nu / params_.lambda) * tensors_.V0.transpose();
  g.col(0).tail(n_) = (nu / params_.lambda) * tensors_.V0hat;
  g.bottomRightCorner(n_, n_) =
      (nu / params_.lambda) * tensors_.V0hat * tensors_.V0.transpose() +
      (nu / h) * tensors_.Chat;
  return g;
}

std::shared_ptr<const Model> make_model(const std::string& basis_id,
                                        const PhysicalParams& params,
                                        bool regularized) {
  return std::make_shared<const Model>(named_basis(basis_id), params, regularized);
}

}  // namespace sswme
