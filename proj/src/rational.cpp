#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace conserva {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0)
        fail(ErrorCode::invalid_argument, "rational with zero denominator");
    v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer(num) || !valid_integer(den))
        fail(ErrorCode::parse, "invalid rational \"" + std::string(text) + "\"");
    if (num.front() == '+')
        num.remove_prefix(1);  // mpz rejects an explicit plus sign
    if (den.front() == '+')
        den.remove_prefix(1);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        fail(ErrorCode::parse, "invalid rational \"" + std::string(text) + "\": zero denominator");
    mpq_class v(n, d);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        fail(ErrorCode::invalid_argument, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero())
        fail(ErrorCode::invalid_argument, "reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace conserva
