#include "knotgauss/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace kg {

void LaurentPoly::add_term(int e, std::int64_t c) {
    if (c == 0) return;
    auto it = coef_.find(e);
    if (it == coef_.end()) {
        coef_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) coef_.erase(it);
    }
}

int LaurentPoly::min_exp() const {
    if (coef_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return coef_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coef_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return coef_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coef_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coef_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : coef_)
        for (auto& [e2, c2] : o.coef_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : coef_) r.coef_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::shift_mul(std::int64_t c, int e) {
    LaurentPoly r;
    for (auto& [e1, c1] : coef_) r.add_term(e1 + e, c1 * c);
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : coef_) r.add_term(e * k, c);
    return r;
}

std::int64_t LaurentPoly::derivative_at_one(int order) const {
    std::int64_t sum = 0;
    for (auto& [e, c] : coef_) {
        std::int64_t f = 1;
        for (int i = 0; i < order; ++i) f *= (e - i);
        sum += c * f;
    }
    return sum;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest power first
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        auto [e, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::int64_t ConwayPoly::det_signed() const {
    std::int64_t sum = 0, pw = 1;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        sum += coeffs[k] * pw;
        pw *= -4;
    }
    return sum;
}

LaurentPoly ConwayPoly::alexander() const {
    // z = t^{1/2} - t^{-1/2}, so z^2 = t - 2 + t^{-1}; knots use even powers only.
    LaurentPoly z2;
    z2 += LaurentPoly::monomial(1, 1);
    z2 += LaurentPoly::monomial(-2, 0);
    z2 += LaurentPoly::monomial(1, -1);
    LaurentPoly acc, pw(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        acc += LaurentPoly::monomial(coeffs[k], 0) * pw;
        pw = pw * z2;
    }
    return acc;
}

bool ConwayPoly::operator==(const ConwayPoly& o) const {
    std::size_t n = std::max(coeffs.size(), o.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) {
        std::int64_t a = k < coeffs.size() ? coeffs[k] : 0;
        std::int64_t b = k < o.coeffs.size() ? o.coeffs[k] : 0;
        if (a != b) return false;
    }
    return true;
}

std::string ConwayPoly::str() const {
    LaurentPoly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p += LaurentPoly::monomial(coeffs[k], 2 * (int)k);
    return p.str("z");
}

}  // namespace kg
