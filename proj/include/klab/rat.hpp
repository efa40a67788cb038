#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace klab {

/// Exact rational number with canonical form: den > 0, gcd(|num|, den) = 1.
/// All arithmetic is exact; intermediate products use 128-bit integers and
/// throw rat_overflow if a result does not fit back into 64 bits.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

  void assign(__int128 n, __int128 d);

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    r.assign((__int128)a.num * b.den + (__int128)b.num * a.den,
             (__int128)a.den * b.den);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    r.assign((__int128)a.num * b.den - (__int128)b.num * a.den,
             (__int128)a.den * b.den);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    r.assign((__int128)a.num * b.num, (__int128)a.den * b.den);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    Rat r;
    r.assign((__int128)a.num * b.den, (__int128)a.den * b.num);
    return r;
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == 1 && den == 1; }
  double to_double() const { return double(num) / double(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  /// Parses "p/q", an integer, or a finite decimal ("0.25" -> 1/4).
  static Rat parse(const std::string& s);
};

struct rat_overflow : std::overflow_error {
  rat_overflow() : std::overflow_error("Rat: 64-bit overflow") {}
};

inline void Rat::assign(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 g = std::gcd((std::uintmax_t)a, (std::uintmax_t)d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw rat_overflow();
  num = (std::int64_t)n;
  den = (std::int64_t)d;
}

inline Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::int64_t scale = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) {
      if (scale > INT64_MAX / 10) throw rat_overflow();
      scale *= 10;
    }
    return Rat(std::stoll(digits), scale);
  }
  return Rat(std::stoll(s));
}

}  // namespace klab
