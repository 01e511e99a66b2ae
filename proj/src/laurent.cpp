#include "qsl2/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qsl2 {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) coeffs_[0] = Rational(c);
}

LaurentPoly::LaurentPoly(const Rational& c, int exp) {
    if (c != 0) coeffs_[exp] = c;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const Rational& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            Rational p = c1 * c2;
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end()) {
                if (p != 0) r.coeffs_.emplace(e1 + e2, p);
            } else {
                it->second += p;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, cc] : coeffs_) r.coeffs_[e] = cc * c;
    return r;
}

Rational LaurentPoly::eval_at_one() const {
    Rational s(0);
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponents
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rational c = it->second;
        int e = it->first;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-c) : c;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

DensePoly to_dense(const LaurentPoly& p, int& shift_out) {
    if (p.is_zero()) {
        shift_out = 0;
        return {};
    }
    shift_out = p.min_exp();
    DensePoly d(p.max_exp() - p.min_exp() + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) d[e - shift_out] = c;
    return d;
}

LaurentPoly from_dense(const DensePoly& p, int shift) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.set_coeff(int(i) + shift, p[i]);
    return r;
}

static void dense_trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly dense_divmod(const DensePoly& a, const DensePoly& b, DensePoly& rem) {
    if (b.empty()) throw std::logic_error("polynomial division by zero");
    rem = a;
    dense_trim(rem);
    DensePoly quot;
    if (rem.size() >= b.size()) quot.assign(rem.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (rem.size() >= b.size()) {
        Rational f = rem.back() / lead;
        size_t off = rem.size() - b.size();
        quot[off] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
        dense_trim(rem);
        if (rem.empty()) break;
    }
    return quot;
}

DensePoly dense_gcd(DensePoly a, DensePoly b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        DensePoly r;
        dense_divmod(a, b, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace qsl2
