#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "cycbar/exactalg/elimination.hpp"
#include "cycbar/exactalg/matrix.hpp"

namespace cycbar::exactalg {

enum class Grading { homological, cohomological };

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

void to_json(nlohmann::json& j, const HomologyGroup& h);

// Free chain complex concentrated in degrees 0..top over Z or F_p.
//
// differentials[n] is the map leaving degree n: to degree n-1 for a
// homological complex, to degree n+1 for a cohomological one. The map out of
// degree 0 (homological) or out of the top degree (cohomological) must have
// zero rows; the complex simply stops there.
class ChainComplex {
 public:
  ChainComplex() = default;
  // Validates shapes and d∘d = 0; throws ValidationError naming the degree.
  ChainComplex(GroundRing ring, Grading grading, std::vector<std::size_t> ranks,
               std::vector<SparseMatrix> differentials);

  // Convenience for homological complexes given ∂_1..∂_top.
  static ChainComplex homological(GroundRing ring, std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);

  const GroundRing& ring() const { return ring_; }
  Grading grading() const { return grading_; }
  std::size_t length() const { return ranks_.size(); }
  std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  // Map leaving degree n (see class comment).
  const SparseMatrix& differential(std::size_t n) const { return diffs_.at(n); }

  // Homology in every degree 0..top; each differential is reduced once.
  std::vector<HomologyGroup> homology() const;
  // Zero group outside the support.
  HomologyGroup homology(long n) const;

  long long euler_characteristic() const;
  // Alternating sum of F_p Betti numbers after reducing the coefficients.
  long long euler_characteristic_mod(std::uint32_t p) const;

  // Same boundary matrices reduced mod p; only valid from Z.
  ChainComplex reduce_mod(std::uint32_t p) const;
  // Keeps degrees < n; the differential out of the new edge is dropped.
  ChainComplex truncate(std::size_t n) const;

 private:
  GroundRing ring_ = GroundRing::integers();
  Grading grading_ = Grading::homological;
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> diffs_;
};

// [{"degree":n,"betti":b,"torsion":[...]}...]
nlohmann::json homology_report(const std::vector<HomologyGroup>& groups);

}  // namespace cycbar::exactalg
