#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ncg/errors.hpp"

namespace ncg {

// Exact fraction over int64 with 128-bit intermediates.  All verdicts in the
// library compare Rationals; doubles only ever appear in display columns.
// Every value arising here has numerator/denominator bounded by order^2 of a
// ring under the order cap, far below the checked limits.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Fixed-point decimal, round half to even.  Display only.
  std::string decimal(int places = 6) const {
    i128 pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    bool negative = num_ < 0;
    i128 n = negative ? -i128(num_) : i128(num_);
    i128 scaled = n * pow10;
    i128 q = scaled / den_;
    i128 r = scaled % den_;
    i128 twice = 2 * r;
    if (twice > den_ || (twice == den_ && (q & 1) != 0)) ++q;
    i128 whole = q / pow10;
    i128 frac = q % pow10;
    std::string frac_str = to_string_i128(frac);
    frac_str.insert(0, static_cast<size_t>(places) - frac_str.size(), '0');
    std::string out = negative && q != 0 ? "-" : "";
    out += to_string_i128(whole);
    if (places > 0) out += "." + frac_str;
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    Rational r;
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error("rational overflow");
    return static_cast<long long>(v);
  }

  static std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + int(v % 10)));
      v /= 10;
    }
    return neg ? "-" + s : s;
  }

  void normalize() {
    Rational r = make(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_;
  long long den_;  // > 0, coprime to num_
};

}  // namespace ncg
