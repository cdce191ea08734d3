#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sy {

/// Thrown for any invalid configuration or out-of-range index supplied by a caller.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Coeff = std::uint32_t;

bool is_prime(std::uint32_t n);

/// Arithmetic in the prime field GF(p). Residues are kept in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Coeff reduce(std::int64_t x) const {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = x % m;
    return static_cast<Coeff>(r < 0 ? r + m : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + (p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  /// (-1)^bit as a residue.
  Coeff sign(unsigned bit) const { return (bit & 1U) ? p_ - 1 : 1 % p_; }
  Coeff inv(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_ = 0;
};

}  // namespace sy
