#pragma once

#include <cstdint>
#include <stdexcept>

namespace canonlift {

// 64-bit modular arithmetic with 128-bit intermediates; moduli up to 2^62.

inline int64_t mod_reduce(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % m);
}

inline int64_t add_mod(int64_t a, int64_t b, int64_t m) {
    int64_t s = a + b;
    return s >= m ? s - m : s;
}

inline int64_t sub_mod(int64_t a, int64_t b, int64_t m) {
    int64_t s = a - b;
    return s < 0 ? s + m : s;
}

inline int64_t pow_mod(int64_t a, uint64_t e, int64_t m) {
    int64_t r = 1 % m;
    a = mod_reduce(a, m);
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline int64_t inv_mod(int64_t a, int64_t m) {
    int64_t t = 0, nt = 1, r = m, nr = mod_reduce(a, m);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: element not invertible");
    return t < 0 ? t + m : t;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        int64_t x = pow_mod(a, static_cast<uint64_t>(d), n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline int64_t ipow_checked(int64_t base, int exp, int64_t cap) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) throw std::invalid_argument("size cap exceeded");
        r *= base;
    }
    return r;
}

}  // namespace canonlift
