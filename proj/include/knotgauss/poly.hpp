#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kg {

/// One-variable Laurent polynomial with exact 64-bit integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::int64_t constant) {
        if (constant != 0) coef_[0] = constant;
    }
    static LaurentPoly monomial(std::int64_t c, int exponent) {
        LaurentPoly p;
        if (c != 0) p.coef_[exponent] = c;
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    std::int64_t coefficient(int exponent) const {
        auto it = coef_.find(exponent);
        return it == coef_.end() ? 0 : it->second;
    }
    const std::map<int, std::int64_t>& terms() const { return coef_; }

    int min_exp() const;
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return coef_ == o.coef_; }

    /// Multiply by c * x^e.
    LaurentPoly& shift_mul(std::int64_t c, int e);

    /// Substitute x -> x^k (k may be negative).
    LaurentPoly substitute_power(int k) const;

    /// Sum of coefficient * e*(e-1)*...*(e-order+1), i.e. the order-th
    /// derivative evaluated at x = 1.
    std::int64_t derivative_at_one(int order) const;

    /// Value at x = 1.
    std::int64_t eval_at_one() const { return derivative_at_one(0); }

    /// Human-readable form like "-t^4 + t^3 + t" (variable name given).
    std::string str(const std::string& var = "t") const;

private:
    std::map<int, std::int64_t> coef_;
    void add_term(int e, std::int64_t c);
};

/// Conway polynomial of a knot: even powers of z only, constant term 1.
struct ConwayPoly {
    /// coeffs[k] is the coefficient of z^(2k).
    std::vector<std::int64_t> coeffs;

    std::int64_t a(int two_k) const {
        int k = two_k / 2;
        return (two_k % 2 == 0 && k >= 0 && k < (int)coeffs.size()) ? coeffs[k] : 0;
    }
    std::int64_t z2_coefficient() const { return a(2); }

    /// Determinant with sign: Delta(-1) = sum a_{2k} (-4)^k.
    std::int64_t det_signed() const;

    /// -3*Delta''(1) computed from the Conway coefficients (Delta obtained by
    /// the substitution z = t^{1/2} - t^{-1/2}).
    LaurentPoly alexander() const;

    bool operator==(const ConwayPoly& o) const;
    std::string str() const;
};

}  // namespace kg
