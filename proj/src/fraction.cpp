#include "stacky/fraction.hpp"

#include <ostream>
#include <stdexcept>

namespace stacky {

Fraction::Fraction(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("Fraction: zero denominator");
    reduce();
}

void Fraction::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Fraction& Fraction::operator+=(const Fraction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += Fraction(-o.num_, o.den_); }

Fraction& Fraction::operator*=(const Fraction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) {
    if (o.num_ == 0) throw std::invalid_argument("Fraction: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::string Fraction::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

}  // namespace stacky
