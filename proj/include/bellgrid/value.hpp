#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bellgrid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Arithmetic mode of a distribution or table. Exact values are rationals,
/// float values are IEEE doubles. Containers are homogeneous; a mode is fixed
/// at construction and never silently changed.
enum class Mode : std::uint8_t { Exact, Float };

/// A number that is either an exact rational or a double, tagged with its
/// mode. Exact op Exact stays exact; anything involving a float is float.
class Value {
 public:
  Value() : mode_(Mode::Exact), r_(0), f_(0.0) {}
  Value(int v) : mode_(Mode::Exact), r_(v), f_(0.0) {}  // NOLINT(google-explicit-constructor)
  Value(const Rational& r) : mode_(Mode::Exact), r_(r), f_(0.0) {}  // NOLINT
  Value(double f) : mode_(Mode::Float), r_(0), f_(f) {}  // NOLINT

  static Value exact(long long num, long long den) { return Value(Rational(num, den)); }

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }

  const Rational& rational() const {
    if (!is_exact()) throw std::logic_error("Value: float value has no exact rational");
    return r_;
  }

  double to_double() const { return is_exact() ? bellgrid::to_double(r_) : f_; }

  Value operator+(const Value& o) const {
    if (is_exact() && o.is_exact()) return Value(Rational(r_ + o.r_));
    return Value(to_double() + o.to_double());
  }
  Value operator-(const Value& o) const {
    if (is_exact() && o.is_exact()) return Value(Rational(r_ - o.r_));
    return Value(to_double() - o.to_double());
  }
  Value operator*(const Value& o) const {
    if (is_exact() && o.is_exact()) return Value(Rational(r_ * o.r_));
    return Value(to_double() * o.to_double());
  }
  Value operator-() const { return is_exact() ? Value(Rational(-r_)) : Value(-f_); }

  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator-=(const Value& o) { return *this = *this - o; }
  Value& operator*=(const Value& o) { return *this = *this * o; }

  bool operator==(const Value& o) const {
    if (is_exact() && o.is_exact()) return r_ == o.r_;
    return to_double() == o.to_double();
  }
  bool operator<(const Value& o) const {
    if (is_exact() && o.is_exact()) return r_ < o.r_;
    return to_double() < o.to_double();
  }
  bool operator<=(const Value& o) const { return *this < o || *this == o; }
  bool operator>=(const Value& o) const { return !(*this < o); }
  bool operator>(const Value& o) const { return o < *this; }

  bool is_zero(double tol = 0.0) const {
    if (is_exact()) return r_ == 0;
    return std::abs(f_) <= tol;
  }

  bool nonnegative(double tol = 0.0) const {
    if (is_exact()) return r_ >= 0;
    return f_ >= -tol;
  }

  std::string str() const {
    if (is_exact()) return r_.str();
    return std::to_string(f_);
  }

 private:
  Mode mode_;
  Rational r_;
  double f_;
};

}  // namespace bellgrid
