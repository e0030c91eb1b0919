#include "stacky/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace stacky {

Poly Poly::term(int exponent, std::int64_t c) {
    Poly p;
    p.add_term(exponent, c);
    return p;
}

Poly Poly::range(int lo, int hi) {
    Poly p;
    for (int d = lo; d <= hi; ++d) p.add_term(d, 1);
    return p;
}

std::int64_t Poly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

void Poly::set_coeff(int exponent, std::int64_t c) {
    if (exponent < 0) throw std::invalid_argument("Poly: negative exponent");
    if (c == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = c;
}

void Poly::add_term(int exponent, std::int64_t c) { set_coeff(exponent, coeff(exponent) + c); }

int Poly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

std::int64_t Poly::eval_at_one() const {
    std::int64_t s = 0;
    for (auto& [e, c] : coeffs_) s += c;
    return s;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (auto& [ea, ca] : a.coeffs_)
        for (auto& [eb, cb] : b.coeffs_) p.add_term(ea + eb, ca * cb);
    return p;
}

std::vector<int> Poly::degree_multiset() const {
    std::vector<int> out;
    for (auto& [e, c] : coeffs_) {
        if (c < 0) throw std::logic_error("Poly: degree_multiset on negative coefficient");
        for (std::int64_t k = 0; k < c; ++k) out.push_back(e);
    }
    return out;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto [e, c] = *it;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        std::int64_t a = c < 0 ? -c : c;
        if (e == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + "*";
            out += e == 1 ? "t" : "t^" + std::to_string(e);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace stacky
