#pragma once

#include <span>
#include <vector>

#include "stbcsm/constellation.hpp"
#include "stbcsm/link.hpp"
#include "stbcsm/rng.hpp"

namespace stbcsm {

/// Antenna pair carrying one Alamouti block. `first` radiates x1 in slot 1,
/// `second` radiates x2.
struct CodewordDescriptor {
  int first = 0;
  int second = 1;
  cd rotation{1.0, 0.0};
};

/// Ordered STBC-SM codewords grouped into codebooks of `per_book`
/// consecutive descriptors with disjoint antenna pairs. Codebook i carries
/// rotation exp(j i theta).
class StbcsmCodebook {
 public:
  static StbcsmCodebook build(int n_t, double theta);

  int n_t() const { return n_t_; }
  int codeword_count() const { return static_cast<int>(descriptors_.size()); }
  int per_book() const { return per_book_; }
  int book_count() const { return book_count_; }
  double theta() const { return theta_; }
  int book_of(int codeword) const { return codeword / per_book_; }
  const CodewordDescriptor& descriptor(int l) const { return descriptors_[static_cast<std::size_t>(l)]; }
  std::span<const CodewordDescriptor> descriptors() const { return descriptors_; }
  int index_bits() const { return ilog2(codeword_count()); }

 private:
  int n_t_ = 0;
  int per_book_ = 0;
  int book_count_ = 0;
  double theta_ = 0.0;
  std::vector<CodewordDescriptor> descriptors_;
};

/// Largest power of two not exceeding C(n_t, 2).
int stbcsm_codeword_count(int n_t);

inline StbcsmCodebook build_codebooks(int n_t, double theta) { return StbcsmCodebook::build(n_t, theta); }

/// Bits per channel use: log2(c) / 2 + log2(M).
double spectral_efficiency(int codewords, int order);

/// 2 x n_t transmit matrix, rows are time slots.
CMatrix codeword_matrix(const CodewordDescriptor& d, int n_t, cd x1, cd x2);

/// Minimum over codeword pairs from different codebooks and over every
/// symbol realization of det[(Xi - Xj)(Xi - Xj)^H].
double min_coding_gain_distance(int n_t, const Constellation& c, double theta);

struct RotationSearch {
  double theta = 0.0;
  double min_cgd = 0.0;
};

/// Grid search of theta over [0, pi]; the first grid point reaching the
/// largest minimum CGD wins.
RotationSearch optimize_rotation_angle(int n_t, const Constellation& c, double grid_step);

struct StbcsmBlock {
  Bits bits;
  int codeword = 0;
  int label1 = 0;
  int label2 = 0;
  cd x1;
  cd x2;
  CMatrix codeword_matrix;
};

int stbcsm_bits_per_block(const StbcsmCodebook& book, const Constellation& c);

StbcsmBlock stbcsm_map(BitSpan bits, const StbcsmCodebook& book, const Constellation& c);

/// 2 n_r x 2 matrix E with [y(slot 1); conj(y(slot 2))] = E [x1; x2] + n.
CMatrix equivalent_channel(const CMatrix& h, const CodewordDescriptor& d);

struct StbcsmDecision {
  int codeword = 0;
  int label1 = 0;
  int label2 = 0;
  cd x1;
  cd x2;
  Bits bits;
};

/// Exhaustive ML against per-codeword effective matrices (c * M^2
/// hypotheses). Ties resolve to the lowest (codeword, label1, label2).
StbcsmDecision stbcsm_ml_detect(const CVector& y, std::span<const CMatrix> equivalents, const StbcsmCodebook& book,
                                const Constellation& c);

/// Exhaustive ML with the plain equivalent channels built from H.
StbcsmDecision stbcsm_ml_detect(const CVector& y, const CMatrix& h, const StbcsmCodebook& book,
                                const Constellation& c);

/// Same decision as the exhaustive detector when every equivalent matrix has
/// orthogonal columns (plain and ABF links); symbols decouple per codeword.
StbcsmDecision stbcsm_ml_detect_decoupled(const CVector& y, std::span<const CMatrix> equivalents,
                                          const StbcsmCodebook& book, const Constellation& c);

inline constexpr double kStbcsmPowerNormalization = 2.0;  // two antennas radiate per slot

/// 2 x 2 symbol-space precoder for one antenna pair. The pair's n_r x 2
/// subchannel is reduced to its triangular factor R (H_ab = Q R, Q with
/// orthonormal columns) and the ZF/MMSE construction is applied to R.
Precoder pair_precoder(const CMatrix& h_pair, PrecoderKind kind, double sigma2);

/// Per-codeword matrices the receiver matches against, including the
/// 1/sqrt(mu) power split, the analog gain, and the pair precoder.
std::vector<CMatrix> stbcsm_effective_channels(const CMatrix& h, const StbcsmCodebook& book, const LinkSpec& link,
                                               double n0);

struct StbcsmTransmission {
  CVector y;
  std::vector<CMatrix> equivalents;
};

/// Sends the block over two slots of the same channel and stacks
/// [y1; conj(y2)].
StbcsmTransmission stbcsm_transmit_receive(const StbcsmBlock& block, const CMatrix& h, const StbcsmCodebook& book,
                                           const LinkSpec& link, double n0, Rng& rng);

}  // namespace stbcsm
