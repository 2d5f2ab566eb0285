#include "cycbar/exactalg/ring.hpp"

#include "cycbar/errors.hpp"

namespace cycbar::exactalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroundRing GroundRing::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw RangeError("modulus " + std::to_string(p) + " is not prime");
  return GroundRing(p);
}

std::string GroundRing::name() const {
  return is_field() ? "F_" + std::to_string(modulus_) : "Z";
}

std::int64_t GroundRing::reduce(std::int64_t v) const {
  if (!is_field()) return v;
  std::int64_t r = v % static_cast<std::int64_t>(modulus_);
  return r < 0 ? r + modulus_ : r;
}

Integer GroundRing::reduce(const Integer& v) const {
  if (!is_field()) return v;
  Integer r;
  Integer m = modulus_;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw ComputationError("element not invertible mod " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace cycbar::exactalg
