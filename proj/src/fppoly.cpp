#include "canonlift/fppoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "canonlift/numeric.hpp"

namespace canonlift {

FpPoly::FpPoly(int64_t prime, std::vector<int64_t> coeffs) : p(prime), c(std::move(coeffs)) {
    for (auto& x : c) x = mod_reduce(x, p);
    normalize();
}

void FpPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i > 0) {
            if (c[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FpPoly fp_zero(int64_t p) { return FpPoly(p, {}); }

FpPoly fp_const(int64_t p, int64_t a) { return FpPoly(p, {a}); }

FpPoly fp_monomial(int64_t p, int degree, int64_t a) {
    std::vector<int64_t> c(degree + 1, 0);
    c[degree] = a;
    return FpPoly(p, std::move(c));
}

static void check_same_p(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::invalid_argument("FpPoly: mixed characteristics");
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    std::vector<int64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coeff(i), b.coeff(i), a.p);
    return FpPoly(a.p, std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    std::vector<int64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a.coeff(i), b.coeff(i), a.p);
    return FpPoly(a.p, std::move(c));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    if (a.is_zero() || b.is_zero()) return fp_zero(a.p);
    std::vector<int64_t> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = add_mod(c[i + j], mul_mod(a.c[i], b.c[j], a.p), a.p);
    }
    return FpPoly(a.p, std::move(c));
}

FpPoly fp_scale(const FpPoly& a, int64_t k) {
    std::vector<int64_t> c(a.c);
    k = mod_reduce(k, a.p);
    for (auto& x : c) x = mul_mod(x, k, a.p);
    return FpPoly(a.p, std::move(c));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    if (b.is_zero()) throw std::domain_error("FpPoly: division by zero");
    if (a.deg() < b.deg()) return {fp_zero(a.p), a};
    std::vector<int64_t> r(a.c), q(a.deg() - b.deg() + 1, 0);
    int64_t inv_lead = inv_mod(b.lead(), a.p);
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        int64_t t = mul_mod(r[k + b.deg()], inv_lead, a.p);
        q[k] = t;
        if (t == 0) continue;
        for (int i = 0; i <= b.deg(); ++i)
            r[k + i] = sub_mod(r[k + i], mul_mod(t, b.c[i], a.p), a.p);
    }
    return {FpPoly(a.p, std::move(q)), FpPoly(a.p, std::move(r))};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    return fp_scale(a, inv_mod(a.lead(), a.p));
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = fp_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return fp_monic(x);
}

FpPoly fp_derivative(const FpPoly& a) {
    if (a.deg() < 1) return fp_zero(a.p);
    std::vector<int64_t> c(a.deg(), 0);
    for (int i = 1; i <= a.deg(); ++i) c[i - 1] = mul_mod(a.c[i], i % a.p, a.p);
    return FpPoly(a.p, std::move(c));
}

FpPoly fp_squarefree_part(const FpPoly& a) {
    if (a.is_zero()) return a;
    FpPoly d = fp_derivative(a);
    if (d.is_zero()) {
        // a = g(X^p); over F_p, g(X^p) = g1(X)^p with p-th-root coefficients
        std::vector<int64_t> c;
        for (size_t i = 0; i < a.c.size(); i += a.p) c.push_back(a.c[i]);
        return fp_squarefree_part(FpPoly(a.p, std::move(c)));
    }
    return fp_monic(fp_divmod(a, fp_gcd(a, d)).first);
}

FpPoly fp_pow_mod(const FpPoly& base, uint64_t e, const FpPoly& mod) {
    FpPoly r = fp_const(base.p, 1), b = fp_mod(base, mod);
    while (e) {
        if (e & 1) r = fp_mod(fp_mul(r, b), mod);
        b = fp_mod(fp_mul(b, b), mod);
        e >>= 1;
    }
    return r;
}

int64_t fp_eval(const FpPoly& a, int64_t x) {
    x = mod_reduce(x, a.p);
    int64_t r = 0;
    for (int i = a.deg(); i >= 0; --i) r = add_mod(mul_mod(r, x, a.p), a.c[i], a.p);
    return r;
}

int64_t fp_resultant(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int64_t p = a.p;
    FpPoly x = a, y = b;
    int64_t res = 1;
    while (y.deg() > 0) {
        FpPoly r = fp_mod(x, y);
        if (r.is_zero()) return 0;
        // res(x, y) = (-1)^{dx*dy} lc(y)^{dx - dr} res(y, r)
        int dx = x.deg(), dy = y.deg(), dr = r.deg();
        if ((static_cast<int64_t>(dx) * dy) & 1) res = sub_mod(0, res, p);
        res = mul_mod(res, pow_mod(y.lead(), static_cast<uint64_t>(dx - dr), p), p);
        x = std::move(y);
        y = std::move(r);
    }
    // y is a nonzero constant
    return mul_mod(res, pow_mod(y.coeff(0), static_cast<uint64_t>(x.deg()), p), p);
}

FpPoly fp_interpolate(int64_t p, const std::vector<std::pair<int64_t, int64_t>>& pts) {
    // Newton's divided differences over F_p
    size_t n = pts.size();
    if (n == 0) return fp_zero(p);
    std::vector<int64_t> xs(n), coef(n);
    for (size_t i = 0; i < n; ++i) { xs[i] = mod_reduce(pts[i].first, p); coef[i] = mod_reduce(pts[i].second, p); }
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            int64_t den = sub_mod(xs[i], xs[i - j], p);
            if (den == 0) throw std::invalid_argument("fp_interpolate: duplicate abscissa");
            coef[i] = mul_mod(sub_mod(coef[i], coef[i - 1], p), inv_mod(den, p), p);
            if (i == j) break;
        }
    FpPoly r = fp_const(p, coef[n - 1]);
    for (int i = static_cast<int>(n) - 2; i >= 0; --i) {
        FpPoly lin(p, {sub_mod(0, xs[i], p), 1});
        r = fp_add(fp_mul(r, lin), fp_const(p, coef[i]));
    }
    return r;
}

bool fp_irreducible(const FpPoly& f) {
    int r = f.deg();
    if (r < 1) return false;
    if (f.lead() != 1) throw std::invalid_argument("fp_irreducible: expects monic input");
    const FpPoly x = fp_monomial(f.p, 1);
    // h_k = X^{p^k} mod f, built by repeated p-th powering
    FpPoly h = x;
    std::vector<FpPoly> iterates{h};  // iterates[k] = X^{p^{k+1}} ... filled below
    iterates.clear();
    for (int k = 1; k <= r; ++k) {
        h = fp_pow_mod(h, static_cast<uint64_t>(f.p), f);
        iterates.push_back(h);
    }
    if (iterates[r - 1] != fp_mod(x, f)) return false;
    for (int l = 2; l <= r; ++l) {
        if (r % l != 0 || !is_prime(l)) continue;
        const FpPoly& hk = iterates[r / l - 1];
        if (fp_gcd(fp_sub(hk, x), f).deg() != 0) return false;
    }
    return true;
}

bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }

}  // namespace canonlift
