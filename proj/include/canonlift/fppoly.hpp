#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace canonlift {

/// Dense univariate polynomial over F_p. Coefficients are residues in [0, p),
/// constant term first, no trailing zeros; the zero polynomial is the empty list.
struct FpPoly {
    int64_t p = 0;
    std::vector<int64_t> c;

    FpPoly() = default;
    FpPoly(int64_t prime, std::vector<int64_t> coeffs);

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    int64_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }
    int64_t lead() const { return c.empty() ? 0 : c.back(); }

    void normalize();
    std::string to_string(const std::string& var = "J") const;
};

FpPoly fp_zero(int64_t p);
FpPoly fp_const(int64_t p, int64_t a);
FpPoly fp_monomial(int64_t p, int degree, int64_t a = 1);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, int64_t k);

/// Euclidean division by a nonzero divisor; returns {quotient, remainder}.
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);

FpPoly fp_monic(const FpPoly& a);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);  // monic
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_squarefree_part(const FpPoly& a);       // monic

FpPoly fp_pow_mod(const FpPoly& base, uint64_t e, const FpPoly& mod);

int64_t fp_eval(const FpPoly& a, int64_t x);

/// Resultant of two polynomials over F_p (Euclidean algorithm).
int64_t fp_resultant(const FpPoly& a, const FpPoly& b);

/// Unique interpolating polynomial of degree < n through n points with
/// distinct abscissae.
FpPoly fp_interpolate(int64_t p, const std::vector<std::pair<int64_t, int64_t>>& pts);

/// Deterministic irreducibility test for monic f: X^{p^deg} == X mod f and
/// gcd(X^{p^{deg/l}} - X, f) = 1 for every prime l | deg.
bool fp_irreducible(const FpPoly& f);

bool operator==(const FpPoly& a, const FpPoly& b);
inline bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

}  // namespace canonlift
