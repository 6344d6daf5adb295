#include "rooted_iso/recurrence.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "rooted_iso/errors.hpp"

namespace rooted_iso {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Berlekamp-Massey over Q: shortest connection polynomial C (C_0 = 1) with
// sum_i C_i s_{n-i} = 0 for all L <= n <= N.
std::pair<std::vector<Rat>, std::size_t>
berlekamp_massey(const std::vector<Rat> &s) {
  std::vector<Rat> C{1}, B{1};
  std::size_t L = 0, m = 1;
  Rat b = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rat delta = s[n];
    for (std::size_t i = 1; i <= L && i <= n; ++i)
      delta += C[i] * s[n - i];
    if (delta == 0) {
      ++m;
      continue;
    }
    if (2 * L <= n) {
      std::vector<Rat> T = C;
      Rat coef = delta / b;
      if (C.size() < B.size() + m)
        C.resize(B.size() + m, 0);
      for (std::size_t i = 0; i < B.size(); ++i)
        C[i + m] -= coef * B[i];
      L = n + 1 - L;
      B = std::move(T);
      b = delta;
      m = 1;
    } else {
      Rat coef = delta / b;
      if (C.size() < B.size() + m)
        C.resize(B.size() + m, 0);
      for (std::size_t i = 0; i < B.size(); ++i)
        C[i + m] -= coef * B[i];
      ++m;
    }
  }
  return {std::move(C), L};
}

std::int64_t to_int64(const Int &x) {
  if (x > Int(INT64_MAX) || x < Int(INT64_MIN))
    throw CapacityError("fitted coefficient overflows 64 bits");
  return static_cast<std::int64_t>(x);
}

} // namespace

std::optional<RationalFit>
detect_rational(const std::vector<std::uint64_t> &series) {
  if (series.size() < 5)
    throw InputError("rational detection requires the series up to c_4");
  std::size_t N = series.size() - 1;
  std::vector<Rat> s(series.begin(), series.end());

  auto [C, L] = berlekamp_massey(s);
  if (L > N / 2)
    return std::nullopt;

  // re-verify the recurrence across the whole prefix
  for (std::size_t n = L; n <= N; ++n) {
    Rat acc = 0;
    for (std::size_t i = 0; i < C.size() && i <= n; ++i)
      acc += C[i] * s[n - i];
    if (acc != 0)
      return std::nullopt;
  }

  // numerator = series * C, truncated below t^L (higher terms vanish)
  std::vector<Rat> P(L == 0 ? 1 : L, 0);
  for (std::size_t k = 0; k < P.size(); ++k)
    for (std::size_t i = 0; i <= k && i < C.size(); ++i)
      P[k] += C[i] * s[k - i];
  while (P.size() > 1 && P.back() == 0)
    P.pop_back();
  while (C.size() > 1 && C.back() == 0)
    C.pop_back();

  // clear denominators and divide out the content
  Int lcm_den = 1;
  for (const Rat &x : P)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  for (const Rat &x : C)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Int> num, den;
  for (const Rat &x : P) {
    Rat scaled = x * lcm_den;
    num.push_back(numerator(scaled));
  }
  for (const Rat &x : C) {
    Rat scaled = x * lcm_den;
    den.push_back(numerator(scaled));
  }
  Int content = 0;
  for (const Int &x : num)
    content = boost::multiprecision::gcd(content, x);
  for (const Int &x : den)
    content = boost::multiprecision::gcd(content, x);
  if (content == 0)
    content = 1;
  RationalFit fit;
  for (const Int &x : num)
    fit.numerator.push_back(to_int64(x / content));
  for (const Int &x : den)
    fit.denominator.push_back(to_int64(x / content));
  if (fit.denominator[0] < 0) {
    for (auto &x : fit.numerator)
      x = -x;
    for (auto &x : fit.denominator)
      x = -x;
  }
  return fit;
}

} // namespace rooted_iso
