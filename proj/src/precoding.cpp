#include "stbcsm/precoding.hpp"

#include <cmath>

#include "stbcsm/error.hpp"

namespace stbcsm {
namespace {

double frobenius_beta(const CMatrix& p) {
  const double energy = p.squaredNorm();
  if (energy <= 0.0) return 0.0;
  return std::sqrt(static_cast<double>(p.cols()) / energy);
}

CMatrix pinv_from(const Eigen::JacobiSVD<CMatrix>& svd, double tolerance) {
  const auto& s = svd.singularValues();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tolerance) inv(i) = 1.0 / s(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

CMatrix pseudo_inverse(const CMatrix& a, double tolerance) {
  return pinv_from(Eigen::JacobiSVD<CMatrix>(a, Eigen::ComputeThinU | Eigen::ComputeThinV), tolerance);
}

Precoder identity_precoder(int n) {
  return {PrecoderKind::Identity, CMatrix::Identity(n, n), 1.0, 0.0};
}

Precoder zf_precoder(const CMatrix& h) {
  if (h.size() == 0) throw DimensionMismatchError("empty channel");
  const Eigen::JacobiSVD<CMatrix> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.singularValues().maxCoeff() <= kSingularTolerance) {
    throw SingularChannelError("channel has no singular value above tolerance");
  }
  // H^H (H H^H)^+ coincides with the pseudo-inverse of H.
  Precoder out{PrecoderKind::ZeroForcing, pinv_from(svd, kSingularTolerance), 1.0, 0.0};
  out.beta = frobenius_beta(out.p);
  return out;
}

Precoder mmse_precoder(const CMatrix& h, double sigma2) {
  if (sigma2 < 0.0) throw Error("mmse_precoder: sigma2 must be non-negative");
  if (sigma2 == 0.0) {
    Precoder out = zf_precoder(h);
    out.kind = PrecoderKind::Mmse;
    return out;
  }
  CMatrix gram = h * h.adjoint();
  gram.diagonal().array() += sigma2;
  // gram is Hermitian, so P^H = gram^-1 H.
  Precoder out{PrecoderKind::Mmse, gram.ldlt().solve(h).adjoint(), 1.0, sigma2};
  out.beta = frobenius_beta(out.p);
  return out;
}

Precoder make_precoder(PrecoderKind kind, const CMatrix& h, double sigma2) {
  switch (kind) {
    case PrecoderKind::ZeroForcing:
      return zf_precoder(h);
    case PrecoderKind::Mmse:
      return mmse_precoder(h, sigma2);
    case PrecoderKind::Identity:
      break;
  }
  return identity_precoder(static_cast<int>(h.cols()));
}

CMatrix effective_channel(const CMatrix& h, const Precoder& p) {
  if (h.cols() != p.p.rows()) {
    throw DimensionMismatchError("effective_channel: H has " + std::to_string(h.cols()) +
                                 " columns but precoder has " + std::to_string(p.p.rows()) + " rows");
  }
  return h * (p.beta * p.p);
}

}  // namespace stbcsm
