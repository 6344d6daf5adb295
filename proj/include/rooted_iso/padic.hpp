#pragma once

#include <cstdint>
#include <optional>

#include "rooted_iso/errors.hpp"

namespace rooted_iso {

std::uint64_t pow_u64_checked(std::uint64_t base, std::uint32_t exp);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t mod);

// Inverse mod an arbitrary modulus; InputError when not coprime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod);

bool is_prime(std::uint64_t n);

/// Truncated p-adic integer: a residue mod p^n with explicit precision.
/// Immutable value type; all arithmetic stays at one (p, n).
class PadicInt {
public:
  PadicInt(std::uint64_t p, std::uint32_t precision, std::uint64_t value);

  std::uint64_t prime() const { return p_; }
  std::uint32_t precision() const { return n_; }
  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return q_; }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return value_ % p_ != 0; }

  // p-adic valuation; defined for nonzero residues only (then < precision).
  std::uint32_t valuation() const;

  PadicInt operator+(const PadicInt &o) const;
  PadicInt operator-(const PadicInt &o) const;
  PadicInt operator*(const PadicInt &o) const;
  PadicInt operator-() const;
  PadicInt inverse() const; // unit required
  PadicInt pow(std::uint64_t e) const;

  friend bool operator==(const PadicInt &, const PadicInt &) = default;

private:
  std::uint64_t p_;
  std::uint32_t n_;
  std::uint64_t q_; // p^n
  std::uint64_t value_;
};

// Least primitive root mod p^2 (also primitive mod every power of p).
std::uint64_t least_primitive_root_mod_p2(std::uint64_t p);

// Generator of the 1-units mod p^n: l = t^(p-1) for the root above.
std::uint64_t one_unit_generator(std::uint64_t p, std::uint32_t precision);

/// Split of a unit u mod p^n (p odd) along Z(p-1) + (1-units):
/// u = teichmueller * l^exponent, teichmueller^(p-1) = 1.  root_index is
/// teichmueller mod p, which identifies the torsion factor.
struct UnitDecomposition {
  std::uint64_t teichmueller;
  std::uint64_t root_index;
  std::uint64_t exponent; // in [0, p^(n-1))
};

UnitDecomposition unit_decompose(const PadicInt &u);

// Predicted cycle length of g^(p^s * k), gcd(k, p) = 1, at a vertex whose
// g-orbit has p-power size: the smallest integer >= orbit_size / p^s,
// which for p-power orbits is max(1, p^(e-s)).
std::uint64_t prime_power_cycle_length(std::uint64_t orbit_size,
                                       std::uint64_t p, std::uint32_t s);

} // namespace rooted_iso
