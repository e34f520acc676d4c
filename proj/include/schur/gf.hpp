#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace schur {

/// Scalar in the prime field GF(p) for a runtime modulus p.
///
/// A default- or integer-constructed value carries no modulus yet and behaves
/// as a plain integer; it adopts a modulus on first contact with a value that
/// has one.  This lets generic code write `K(0)` and `K(1)` without knowing
/// the field.  Combining two values with distinct moduli throws.
class Gf {
public:
  Gf() : v_(0), p_(0) {}
  Gf(long long x) : v_(x), p_(0) {}
  Gf(long long x, std::uint32_t p) : v_(0), p_(p) {
    require_prime(p);
    v_ = reduce(x, p);
  }

  static Gf zero(std::uint32_t p) { return Gf(0, p); }
  static Gf one(std::uint32_t p) { return Gf(1, p); }

  /// 0 means "modulus not yet adopted".
  std::uint32_t characteristic() const { return p_; }
  long long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Gf operator+(const Gf& a, const Gf& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return Gf(x + y);
    return make(reduce(x + y, p), p);
  }
  friend Gf operator-(const Gf& a, const Gf& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return Gf(x - y);
    return make(reduce(x - y, p), p);
  }
  friend Gf operator*(const Gf& a, const Gf& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return Gf(x * y);
    return make(reduce(x * y, p), p);
  }
  Gf operator-() const {
    if (p_ == 0) return Gf(-v_);
    return make(v_ == 0 ? 0 : p_ - v_, p_);
  }
  Gf& operator+=(const Gf& o) { return *this = *this + o; }
  Gf& operator-=(const Gf& o) { return *this = *this - o; }
  Gf& operator*=(const Gf& o) { return *this = *this * o; }

  /// Multiplicative inverse.  Inverting an integer value without a modulus is
  /// only defined for +-1.
  Gf inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("field unspecified for inversion");
    }
    // Extended Euclid on (v, p); p prime guarantees a unit.
    long long t = 0, new_t = 1, r = p_, new_r = v_;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return make(reduce(t, p_), p_);
  }
  friend Gf operator/(const Gf& a, const Gf& b) { return a * b.inv(); }

  Gf pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Gf acc = p_ == 0 ? Gf(1) : one(p_);
    Gf base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Gf& a, const Gf& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return x == y;
    return reduce(x, p) == reduce(y, p);
  }
  friend bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }

  std::string to_string() const { return std::to_string(v_); }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

private:
  long long v_;
  std::uint32_t p_;

  static Gf make(long long reduced, std::uint32_t p) {
    Gf g;
    g.v_ = reduced;
    g.p_ = p;
    return g;
  }
  static long long reduce(long long x, std::uint32_t p) {
    long long r = x % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }
  static void require_prime(std::uint32_t p) {
    thread_local std::set<std::uint32_t> seen;
    if (seen.count(p)) return;
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
    seen.insert(p);
  }
  struct Unified {
    long long x, y;
    std::uint32_t p;
  };
  static Unified unify(const Gf& a, const Gf& b) {
    if (a.p_ == b.p_) return {a.v_, b.v_, a.p_};
    if (a.p_ == 0) return {a.v_, b.v_, b.p_};
    if (b.p_ == 0) return {a.v_, b.v_, a.p_};
    throw std::invalid_argument("field mismatch");
  }
};

/// Field descriptor for GF(p); produces scalars bound to one modulus.
struct GfField {
  using Scalar = Gf;
  std::uint32_t p;

  explicit GfField(std::uint32_t prime) : p(prime) {
    if (!Gf::is_prime(prime)) throw std::invalid_argument("modulus is not prime");
  }
  Gf zero() const { return Gf::zero(p); }
  Gf one() const { return Gf::one(p); }
  Gf from_int(long long x) const { return Gf(x, p); }
  std::uint32_t characteristic() const { return p; }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

} // namespace schur
