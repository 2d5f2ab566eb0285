#include "cycbar/exactalg/chain_complex.hpp"

#include <string>

#include "cycbar/errors.hpp"

namespace cycbar::exactalg {

void to_json(nlohmann::json& j, const HomologyGroup& h) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : h.torsion) {
    if (t.fits_slong_p())
      torsion.push_back(t.get_si());
    else
      torsion.push_back(t.get_str());
  }
  j = nlohmann::json{{"betti", h.betti}, {"torsion", std::move(torsion)}};
}

ChainComplex::ChainComplex(GroundRing ring, Grading grading, std::vector<std::size_t> ranks,
                           std::vector<SparseMatrix> differentials)
    : ring_(ring), grading_(grading), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  const std::size_t len = ranks_.size();
  if (diffs_.size() != len) throw ValidationError("need one differential per degree");
  for (std::size_t n = 0; n < len; ++n) {
    const bool terminal = grading_ == Grading::homological ? n == 0 : n + 1 == len;
    const std::size_t target = terminal ? 0 : (grading_ == Grading::homological ? ranks_[n - 1] : ranks_[n + 1]);
    const SparseMatrix& d = diffs_[n];
    if (d.cols() != ranks_[n] || d.rows() != target)
      throw ValidationError("differential out of degree " + std::to_string(n) + " has the wrong shape");
    diffs_[n].normalize(ring_);
  }
  for (std::size_t n = 0; n + 1 < len; ++n) {
    // Composite through degree n+1 (homological) or n (cohomological).
    const SparseMatrix& first = grading_ == Grading::homological ? diffs_[n + 1] : diffs_[n];
    const SparseMatrix& second = grading_ == Grading::homological ? diffs_[n] : diffs_[n + 1];
    if (second.rows() == 0) continue;
    if (!SparseMatrix::multiply(second, first, ring_).is_zero())
      throw ValidationError("d^2 != 0 on chains of degree " + std::to_string(grading_ == Grading::homological ? n + 1 : n));
  }
}

ChainComplex ChainComplex::homological(GroundRing ring, std::vector<std::size_t> ranks,
                                       std::vector<SparseMatrix> boundaries) {
  if (ranks.empty()) return ChainComplex(ring, Grading::homological, {}, {});
  if (boundaries.size() + 1 != ranks.size()) throw ValidationError("need one boundary per positive degree");
  std::vector<SparseMatrix> diffs;
  diffs.emplace_back(0, ranks[0]);
  for (auto& b : boundaries) diffs.push_back(std::move(b));
  return ChainComplex(ring, Grading::homological, std::move(ranks), std::move(diffs));
}

std::vector<HomologyGroup> ChainComplex::homology() const {
  const std::size_t len = ranks_.size();
  std::vector<MatrixInvariants> inv;
  inv.reserve(len);
  for (const auto& d : diffs_) inv.push_back(matrix_invariants(d, ring_));
  std::vector<HomologyGroup> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    const MatrixInvariants* incoming = nullptr;
    if (grading_ == Grading::homological && n + 1 < len) incoming = &inv[n + 1];
    if (grading_ == Grading::cohomological && n > 0) incoming = &inv[n - 1];
    const std::size_t image = incoming ? incoming->rank : 0;
    out[n].betti = ranks_[n] - inv[n].rank - image;
    if (incoming) out[n].torsion = incoming->torsion;
  }
  return out;
}

HomologyGroup ChainComplex::homology(long n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= ranks_.size()) return {};
  const std::size_t k = static_cast<std::size_t>(n);
  HomologyGroup h;
  const MatrixInvariants out = matrix_invariants(diffs_[k], ring_);
  std::size_t image = 0;
  const bool has_in = grading_ == Grading::homological ? k + 1 < ranks_.size() : k > 0;
  if (has_in) {
    const MatrixInvariants in = matrix_invariants(diffs_[grading_ == Grading::homological ? k + 1 : k - 1], ring_);
    image = in.rank;
    h.torsion = in.torsion;
  }
  h.betti = ranks_[k] - out.rank - image;
  return h;
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t n = 0; n < ranks_.size(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(ranks_[n]);
  return chi;
}

long long ChainComplex::euler_characteristic_mod(std::uint32_t p) const {
  const ChainComplex reduced = ring_.is_field() ? *this : reduce_mod(p);
  long long chi = 0;
  const auto groups = reduced.homology();
  for (std::size_t n = 0; n < groups.size(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[n].betti);
  return chi;
}

ChainComplex ChainComplex::reduce_mod(std::uint32_t p) const {
  if (ring_.is_field()) throw RangeError("complex is already over a field");
  const GroundRing field = GroundRing::prime_field(p);
  std::vector<SparseMatrix> diffs = diffs_;
  for (auto& d : diffs) d.normalize(field);
  return ChainComplex(field, grading_, ranks_, std::move(diffs));
}

ChainComplex ChainComplex::truncate(std::size_t n) const {
  if (n >= ranks_.size()) return *this;
  std::vector<std::size_t> ranks(ranks_.begin(), ranks_.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<SparseMatrix> diffs(diffs_.begin(), diffs_.begin() + static_cast<std::ptrdiff_t>(n));
  if (grading_ == Grading::cohomological && n > 0) diffs.back() = SparseMatrix(0, ranks.back());
  return ChainComplex(ring_, grading_, std::move(ranks), std::move(diffs));
}

nlohmann::json homology_report(const std::vector<HomologyGroup>& groups) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t n = 0; n < groups.size(); ++n) {
    nlohmann::json entry = groups[n];
    entry["degree"] = n;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace cycbar::exactalg
