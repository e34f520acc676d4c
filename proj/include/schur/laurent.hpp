#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace schur {

/// Laurent polynomial in one variable q with integer coefficients.
///
/// All symbolic q-data in this library (twist exponents, signs) lives here;
/// specialization into a field happens through eval().
class Laurent {
public:
  Laurent() = default;
  Laurent(long long c) {
    if (c != 0) c_[0] = c;
  }
  static Laurent monomial(long long coeff, int exp) {
    Laurent l;
    if (coeff != 0) l.c_[exp] = coeff;
    return l;
  }
  static Laurent q(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  const std::map<int, long long>& coefficients() const { return c_; }
  long long coefficient(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (auto& [e, c] : b.c_) r.add_term(e, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (auto& [e, c] : b.c_) r.add_term(e, -c);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [e1, c1] : a.c_)
      for (auto& [e2, c2] : b.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Specialize q to a nonzero field element.
  template <class K>
  K eval(const K& q0) const {
    if (q0.is_zero()) throw std::domain_error("q must be non-zero");
    K acc = q0 - q0; // zero carrying q0's field
    for (auto& [e, c] : c_) acc += K(c) * q0.pow(e);
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      auto [e, c] = *it;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      long long a = c > 0 ? c : -c;
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

private:
  std::map<int, long long> c_; // exponent -> coefficient, zeros erased

  void add_term(int e, long long c) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (c != 0) c_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
};

} // namespace schur
