#include "liecoh/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace liecoh {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw std::domain_error("Rational: reciprocal of zero");
    Rational r(1);
    r /= *this;
    return r;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("Rational: malformed literal '" + s + "'");
    // GMP rejects an explicit leading plus
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    mpz_class d(den);
    if (sgn(d) == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    Rational r;
    r.v_ = mpq_class(mpz_class(num), d);
    r.v_.canonicalize();
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

bool vq_is_zero(const VectorQ& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

void vq_axpy(VectorQ& dst, const Rational& c, const VectorQ& src) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (!src[i].is_zero())
            dst[i] += c * src[i];
}

VectorQ vq_scaled(const VectorQ& v, const Rational& c) {
    VectorQ r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            r[i] = c * v[i];
    return r;
}

std::string vq_to_string(const VectorQ& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace liecoh
