#pragma once

#include "stbcsm/types.hpp"

namespace stbcsm {

enum class PrecoderKind { Identity, ZeroForcing, Mmse };

/// Linear transmit precoder. `p` is kept un-normalized; the matrix actually
/// applied is beta * p with ||beta * p||_F^2 == p.cols(). The receiver is
/// given the same scaled matrix and does not undo beta.
struct Precoder {
  PrecoderKind kind = PrecoderKind::Identity;
  CMatrix p;
  double beta = 1.0;
  double sigma2 = 0.0;

  CMatrix scaled() const { return beta * p; }
};

/// Singular values at or below this are treated as zero.
inline constexpr double kSingularTolerance = 1e-12;

/// Moore-Penrose pseudo-inverse via SVD.
CMatrix pseudo_inverse(const CMatrix& a, double tolerance = kSingularTolerance);

Precoder identity_precoder(int n);

/// P = H^H (H H^H)^+. Throws SingularChannelError when H is numerically zero.
Precoder zf_precoder(const CMatrix& h);

/// P = H^H (H H^H + sigma2 I)^-1. sigma2 == 0 falls back to zf_precoder.
Precoder mmse_precoder(const CMatrix& h, double sigma2);

Precoder make_precoder(PrecoderKind kind, const CMatrix& h, double sigma2);

/// H_b = H * (beta * P).
CMatrix effective_channel(const CMatrix& h, const Precoder& p);

}  // namespace stbcsm
