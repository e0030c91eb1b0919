#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace stacky {

// Univariate integer-coefficient polynomial in t, sparse map exponent ->
// coefficient.  Zero coefficients are never stored; exponents are >= 0.
// Used for Poincare polynomials P(R;t), P(I;t) and Hilbert numerators.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::int64_t c) { if (c != 0) coeffs_[0] = c; }

    static Poly term(int exponent, std::int64_t c = 1);
    // t^lo + t^(lo+1) + ... + t^hi (empty when hi < lo).
    static Poly range(int lo, int hi);

    std::int64_t coeff(int exponent) const;
    void set_coeff(int exponent, std::int64_t c);
    void add_term(int exponent, std::int64_t c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    std::int64_t eval_at_one() const;

    const std::map<int, std::int64_t>& terms() const { return coeffs_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Degrees listed with multiplicity, ascending: 2t^4 + t^6 -> {4,4,6}.
    std::vector<int> degree_multiset() const;

    // "t^6 + 2t^4" style rendering, descending exponents; "0" when zero.
    std::string str() const;

private:
    std::map<int, std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace stacky
