#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>

namespace stacky {

// Exact rational number on int64 with reduced representation, q > 0.
// Magnitudes stay tiny here (denominators divide lcm(e_i) <= 27720 for
// the signatures we handle), so no big-integer backend is needed.
class Fraction {
public:
    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t n) : num_(n), den_(1) {}
    Fraction(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Fraction operator-() const { return Fraction(-num_, den_); }
    Fraction& operator+=(const Fraction& o);
    Fraction& operator-=(const Fraction& o);
    Fraction& operator*=(const Fraction& o);
    Fraction& operator/=(const Fraction& o);

    friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
    friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
    friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    // Serialized as "p/q", with "/q" omitted when q == 1.
    std::string str() const;

private:
    void reduce();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace stacky
