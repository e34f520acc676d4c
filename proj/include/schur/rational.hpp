#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace schur {

/// Exact rational scalar (arbitrary precision, always in lowest terms).
class Rat {
public:
  using Rep = boost::multiprecision::cpp_rational;

  Rat() : v_(0) {}
  Rat(long long x) : v_(x) {}
  Rat(long long num, long long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("division by zero");
  }
  explicit Rat(Rep v) : v_(std::move(v)) {}

  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }

  std::uint32_t characteristic() const { return 0; }
  bool is_zero() const { return v_ == 0; }
  const Rep& rep() const { return v_; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(Rep(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(Rep(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(Rep(a.v_ * b.v_)); }
  Rat operator-() const { return Rat(Rep(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rat(Rep(1 / v_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

  Rat pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Rat acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  std::string to_string() const { return v_.str(); }

private:
  Rep v_;
};

/// Field descriptor for the rationals, mirroring GfField's interface.
struct RatField {
  using Scalar = Rat;

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(long long x) const { return Rat(x); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
};

} // namespace schur
