#include "stacky/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "stacky/error.hpp"

namespace stacky {

int Signature::max_e() const {
    int m = 1;
    for (int ei : e) m = std::max(m, ei);
    return m;
}

bool operator<(const Signature& a, const Signature& b) {
    if (a.g != b.g) return a.g < b.g;
    if (a.e != b.e) return a.e < b.e;
    return a.delta < b.delta;
}

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

int parse_nonneg(const std::string& s, const std::string& what) {
    if (s.empty()) throw ParseError("signature: empty " + what);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("signature: bad " + what + " '" + s + "'");
    long long v = 0;
    for (char c : s) {
        v = v * 10 + (c - '0');
        if (v > 1000000) throw ParseError("signature: " + what + " out of range");
    }
    return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

Signature parse_signature(const std::string& text) {
    std::string s = strip(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    char sep = s.find(';') != std::string::npos ? ';' : ':';
    auto parts = split(s, sep);
    if (parts.size() != 3)
        throw ParseError("signature: expected \"(g;e1,...,er;d)\", got '" + text + "'");

    Signature sig;
    sig.g = parse_nonneg(parts[0], "genus");
    sig.delta = parse_nonneg(parts[2], "log degree");
    if (!(parts[1].empty() || parts[1] == "-")) {
        for (const auto& tok : split(parts[1], ',')) {
            int ei = parse_nonneg(tok, "stabilizer order");
            if (ei < 2) throw ParseError("signature: stabilizer order " + tok + " < 2");
            sig.e.push_back(ei);
        }
    }
    std::sort(sig.e.begin(), sig.e.end());
    return sig;
}

std::string format_signature(const Signature& sig) {
    std::ostringstream os;
    os << "(" << sig.g << ";";
    if (sig.e.empty()) {
        os << "-";
    } else {
        for (size_t i = 0; i < sig.e.size(); ++i) os << (i ? "," : "") << sig.e[i];
    }
    os << ";" << sig.delta << ")";
    return os.str();
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::NegativeDegree: return "NegativeDegree";
        case CaseTag::ZeroDegree: return "ZeroDegree";
        case CaseTag::GenusZeroHyperbolic: return "GenusZeroHyperbolic";
        case CaseTag::GenusOneHyperbolic: return "GenusOneHyperbolic";
        case CaseTag::HighGenus: return "HighGenus";
        case CaseTag::ClassicalLog: return "ClassicalLog";
    }
    return "?";
}

Fraction deg_canonical(const Signature& sig) {
    Fraction a(2LL * sig.g - 2 + sig.delta);
    for (int ei : sig.e) a += Fraction(ei - 1, ei);
    return a;
}

Fraction stacky_genus(const Signature& sig) {
    Fraction s(sig.g);
    for (int ei : sig.e) s += Fraction(ei - 1, 2LL * ei);
    return s;
}

long long floor_degree(const Signature& sig, long long d) {
    long long deg = d * (2LL * sig.g - 2) + d * sig.delta;
    for (int ei : sig.e) deg += (d * (ei - 1)) / ei;
    return deg;
}

long long dim_h0(const Signature& sig, long long d) {
    if (d == 0) return 1;
    long long deg = floor_degree(sig, d);
    if (deg < 0) return 0;
    if (deg > 2LL * sig.g - 2) return deg - sig.g + 1;
    if (sig.g == 0) return deg + 1;
    // g = 1, deg floor(dD) = 0: every floor coefficient is >= 0 with K_X the
    // zero divisor, so the floor divisor is the zero divisor itself.
    if (sig.g == 1 && deg == 0) return 1;
    if (sig.g >= 2 && d == 1 && sig.delta == 0) return sig.g;
    throw UnhandledSpecialDivisor("dim_h0: special divisor at " + format_signature(sig) +
                                  ", d=" + std::to_string(d));
}

CaseTag classify(const Signature& sig) {
    Fraction a = deg_canonical(sig);
    if (a.sign() < 0) return CaseTag::NegativeDegree;
    if (a.sign() == 0) return CaseTag::ZeroDegree;
    if (sig.g >= 2) return CaseTag::HighGenus;
    if (sig.e.empty()) return CaseTag::ClassicalLog;
    return sig.g == 1 ? CaseTag::GenusOneHyperbolic : CaseTag::GenusZeroHyperbolic;
}

long long period_lcm(const Signature& sig) {
    long long l = 1;
    for (int ei : sig.e) l = std::lcm(l, static_cast<long long>(ei));
    return l;
}

}  // namespace stacky
