#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfw {

// All lattice data (exponents, normals, offsets) lives in fixed-width signed
// integers; arithmetic that could wrap throws instead.  Series coefficients
// and linear algebra use arbitrary precision.  `long` rather than `long long`
// so the GMP class constructors apply without ambiguity.
using Int = long;
static_assert(sizeof(Int) == 8, "Int must be 64-bit");
using BigInt = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

// Exact dot product of integer vectors.
inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline bool vec_le(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline Int lcm_checked(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

// Divides by the gcd of the entries; zero vectors are left alone.
inline IntVec primitive(IntVec v) {
  Int g = gcd_of(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

inline Rational make_rational(Int num, Int den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rational& r) { return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0; }

// FNV-1a over raw bytes; used for input digests in reports.
inline std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace nfw
