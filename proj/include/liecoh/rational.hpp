#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace liecoh {

/// Exact rational scalar. Always kept in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);

    /// Parses "p/q" or "p" (optional sign, base 10). Throws std::invalid_argument.
    static Rational from_string(const std::string& s);

    /// Canonical text form: "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational reciprocal() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Dense vector of rationals. Length is fixed by context (ambient dimension).
using VectorQ = std::vector<Rational>;

bool vq_is_zero(const VectorQ& v);
/// dst += c * src
void vq_axpy(VectorQ& dst, const Rational& c, const VectorQ& src);
VectorQ vq_scaled(const VectorQ& v, const Rational& c);
std::string vq_to_string(const VectorQ& v);

}  // namespace liecoh
