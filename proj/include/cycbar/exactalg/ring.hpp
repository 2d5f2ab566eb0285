#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cycbar::exactalg {

using Integer = mpz_class;

// The ground ring of a computation: the integers or a prime field F_p.
class GroundRing {
 public:
  static GroundRing integers() { return GroundRing(0); }
  // Throws RangeError unless p is prime.
  static GroundRing prime_field(std::uint32_t p);

  bool is_field() const { return modulus_ != 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::string name() const;

  // Canonical representative: in [0, p) over F_p, unchanged over Z.
  std::int64_t reduce(std::int64_t v) const;
  Integer reduce(const Integer& v) const;

  friend bool operator==(const GroundRing&, const GroundRing&) = default;

 private:
  explicit GroundRing(std::uint32_t m) : modulus_(m) {}
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

// Inverse of a modulo the prime p; a must be nonzero mod p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace cycbar::exactalg
