#include "rooted_iso/padic.hpp"

#include <numeric>
#include <vector>

namespace rooted_iso {

std::uint64_t pow_u64_checked(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base)
      throw CapacityError("integer power overflows 64 bits");
    out *= base;
  }
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t out = 1 % mod;
  a %= mod;
  while (e > 0) {
    if (e & 1)
      out = mul_mod(out, a, mod);
    a = mul_mod(a, a, mod);
    e >>= 1;
  }
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  // extended Euclid, in signed arithmetic
  if (mod > static_cast<std::uint64_t>(INT64_MAX))
    throw CapacityError("modulus exceeds the signed 64-bit range");
  std::int64_t r0 = static_cast<std::int64_t>(mod);
  std::int64_t r1 = static_cast<std::int64_t>(a % mod);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw InputError("element is not invertible mod modulus");
  std::int64_t inv = s0 % static_cast<std::int64_t>(mod);
  if (inv < 0)
    inv += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PadicInt::PadicInt(std::uint64_t p, std::uint32_t precision,
                   std::uint64_t value)
    : p_(p), n_(precision) {
  if (!is_prime(p))
    throw InputError("p must be prime");
  if (precision == 0)
    throw InputError("precision must be positive");
  q_ = pow_u64_checked(p, precision);
  // inverse_mod works in signed arithmetic
  if (q_ > static_cast<std::uint64_t>(INT64_MAX))
    throw CapacityError("p^precision exceeds the signed 64-bit range");
  value_ = value % q_;
}

std::uint32_t PadicInt::valuation() const {
  if (value_ == 0)
    throw InputError("valuation of zero residue is undefined");
  std::uint32_t v = 0;
  std::uint64_t x = value_;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

PadicInt PadicInt::operator+(const PadicInt &o) const {
  if (p_ != o.p_ || n_ != o.n_)
    throw InputError("p-adic precision mismatch");
  return PadicInt(p_, n_, (value_ + o.value_) % q_);
}

PadicInt PadicInt::operator-(const PadicInt &o) const {
  if (p_ != o.p_ || n_ != o.n_)
    throw InputError("p-adic precision mismatch");
  return PadicInt(p_, n_, (value_ + q_ - o.value_) % q_);
}

PadicInt PadicInt::operator*(const PadicInt &o) const {
  if (p_ != o.p_ || n_ != o.n_)
    throw InputError("p-adic precision mismatch");
  return PadicInt(p_, n_, mul_mod(value_, o.value_, q_));
}

PadicInt PadicInt::operator-() const {
  return PadicInt(p_, n_, (q_ - value_) % q_);
}

PadicInt PadicInt::inverse() const {
  if (!is_unit())
    throw InputError("p-adic inverse requires a unit");
  return PadicInt(p_, n_, inverse_mod(value_, q_));
}

PadicInt PadicInt::pow(std::uint64_t e) const {
  return PadicInt(p_, n_, pow_mod(value_, e, q_));
}

std::uint64_t least_primitive_root_mod_p2(std::uint64_t p) {
  if (p == 2)
    throw InputError("primitive roots mod powers of 2 are unsupported");
  std::uint64_t q = p * p;
  std::uint64_t group = p * (p - 1);
  // collect the prime factors of p(p-1)
  std::vector<std::uint64_t> factors;
  std::uint64_t rest = group;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      factors.push_back(d);
      while (rest % d == 0)
        rest /= d;
    }
  }
  if (rest > 1)
    factors.push_back(rest);
  for (std::uint64_t t = 2; t < q; ++t) {
    if (t % p == 0)
      continue;
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (pow_mod(t, group / f, q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive)
      return t;
  }
  throw InputError("no primitive root found"); // unreachable for prime p
}

std::uint64_t one_unit_generator(std::uint64_t p, std::uint32_t precision) {
  std::uint64_t t = least_primitive_root_mod_p2(p);
  std::uint64_t q = pow_u64_checked(p, precision);
  return pow_mod(t, p - 1, q);
}

UnitDecomposition unit_decompose(const PadicInt &u) {
  std::uint64_t p = u.prime();
  if (p == 2)
    throw InputError("unit decomposition requires an odd prime");
  if (!u.is_unit())
    throw InputError("unit decomposition requires a unit");
  std::uint32_t n = u.precision();
  std::uint64_t q = u.modulus();

  // Teichmueller representative: the (p-1)-th root of unity congruent to u
  // mod p, reached as the fixed point of x -> x^p.
  std::uint64_t eps = u.value();
  for (std::uint32_t i = 0; i + 1 < n; ++i)
    eps = pow_mod(eps, p, q);

  std::uint64_t l = one_unit_generator(p, n);
  std::uint64_t target = mul_mod(u.value(), inverse_mod(eps, q), q);

  // discrete log of the 1-unit part in the cyclic group generated by l
  // (order p^(n-1)), solved digit by digit
  std::uint64_t order = q / p; // p^(n-1)
  std::uint64_t gamma = pow_mod(l, order / p, q); // order p
  std::uint64_t z = 0;
  std::uint64_t pk = 1;
  std::uint64_t h = target;
  for (std::uint32_t k = 0; k + 1 < n; ++k) {
    std::uint64_t probe = pow_mod(h, order / (pk * p), q);
    std::uint64_t d = 0;
    std::uint64_t acc = 1;
    while (acc != probe) {
      acc = mul_mod(acc, gamma, q);
      if (++d >= p)
        throw InputError("discrete log failed; inconsistent unit");
    }
    z += d * pk;
    h = mul_mod(h, inverse_mod(pow_mod(l, d * pk, q), q), q);
    pk *= p;
  }
  if (h != 1)
    throw InputError("discrete log failed; inconsistent unit");
  return UnitDecomposition{eps, eps % p, z};
}

std::uint64_t prime_power_cycle_length(std::uint64_t orbit_size,
                                       std::uint64_t p, std::uint32_t s) {
  std::uint64_t check = orbit_size;
  while (check > 1) {
    if (check % p != 0)
      throw InputError("orbit size is not a power of p");
    check /= p;
  }
  if (orbit_size == 0)
    throw InputError("orbit size must be positive");
  std::uint64_t ps = pow_u64_checked(p, s);
  // smallest integer >= orbit_size / p^s
  return (orbit_size + ps - 1) / ps;
}

} // namespace rooted_iso
