#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mco {

/// Exact rational arithmetic for delay / energy / cost bookkeeping.
///
/// Every engine input is an integer (bits, bits-per-second, whole
/// milliseconds, processing units), so all derived quantities are exact
/// rationals. Keeping them exact makes floor-to-integer reporting and
/// rank ties deterministic instead of depending on double rounding.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  static Rational ratio(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    return r;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= value. Exact.
  long long floor() const {
    if (num_ >= 0 || num_ % den_ == 0) return num_ / den_;
    return num_ / den_ - 1;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const { return ratio(-num_, den_); }

  Rational operator+(const Rational& o) const {
    __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    __int128 d = i128(den_) * o.den_;
    return from_i128(n, d);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return from_i128(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return from_i128(i128(num_) * o.den_, i128(den_) * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// Exact decimal rendering, at most `max_frac` fractional digits
  /// (trailing zeros trimmed). Digits beyond max_frac are truncated
  /// toward zero; engine values stay well inside 9 digits.
  std::string to_decimal(int max_frac = 9) const {
    __int128 n = num_;
    std::string sign;
    if (n < 0) {
      sign = "-";
      n = -n;
    }
    __int128 whole = n / den_;
    __int128 rem = n % den_;
    std::string out = sign + i128_to_string(whole);
    if (rem == 0 || max_frac <= 0) return out;
    std::string frac;
    for (int i = 0; i < max_frac && rem != 0; ++i) {
      rem *= 10;
      frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den_)));
      rem %= den_;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.empty()) return out;
    return out + "." + frac;
  }

 private:
  using i128 = __int128;

  static Rational from_i128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 maxll = std::numeric_limits<long long>::max();
    if (n > maxll || n < -maxll || d > maxll)
      throw std::overflow_error("rational: value out of range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static std::string i128_to_string(__int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_{0};
  long long den_{1};
};

/// Link capacity in bits per second. Pure-latency hops carry unlimited
/// capacity and contribute zero serialization time.
struct Bandwidth {
  long long bps{0};
  bool infinite{false};

  static Bandwidth bits_per_second(long long v) { return Bandwidth{v, false}; }
  static Bandwidth mbps(double v) {
    return Bandwidth{static_cast<long long>(v * 1e6 + 0.5), false};
  }
  static Bandwidth unlimited() { return Bandwidth{0, true}; }

  bool operator==(const Bandwidth&) const = default;
};

}  // namespace mco
