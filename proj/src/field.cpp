#include "superyangian/field.hpp"

namespace sy {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw ConfigError("modulus " + std::to_string(p) + " is not prime");
  if (p >= (1U << 31)) throw ConfigError("modulus must be below 2^31");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Coeff>(result);
}

}  // namespace sy
