#ifndef CONSERVA_RATIONAL_HPP
#define CONSERVA_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace conserva {

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Every arithmetic operation is exact; there is no rounding anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);

    /// Parses "p" or "p/q" with optional sign, no decimals. Throws Error(parse).
    static Rational parse(std::string_view text);

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational reciprocal() const;

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace conserva

#endif
