#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "canonlift/fppoly.hpp"

namespace canonlift {

/// A finite field F_{p^r} in the polynomial basis F_p[X]/(modulus).
///
/// The modulus is the canonical one: the monic irreducible polynomial of
/// degree r whose non-leading coefficient list, read as the integer
/// sum c_i p^i, is smallest. Two fields with equal (p, r) are therefore
/// structurally identical, and make_field returns a shared instance.
struct FqField {
    int64_t p;
    int r;
    int64_t q;        // p^r
    FpPoly modulus;   // monic, degree r
};

using FieldPtr = std::shared_ptr<const FqField>;

/// Canonical field constructor; idempotent. Enforces p prime, r >= 1, p^r <= 2^40.
FieldPtr make_field(int64_t p, int r);

class FqElement {
public:
    FqElement() = default;
    FqElement(FieldPtr field, std::vector<int64_t> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<int64_t>& coeffs() const { return c_; }
    int64_t p() const { return field_->p; }
    bool is_zero() const;
    bool is_one() const;

    FqElement operator-() const;
    FqElement inverse() const;

    /// Encoding as comma-separated residues, constant term first.
    std::string to_string() const;

    friend FqElement operator+(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a, const FqElement& b);
    friend FqElement operator*(const FqElement& a, const FqElement& b);
    friend bool operator==(const FqElement& a, const FqElement& b);
    friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }

private:
    FieldPtr field_;
    std::vector<int64_t> c_;  // size r, residues in [0, p)
};

FqElement fq_zero(const FieldPtr& f);
FqElement fq_one(const FieldPtr& f);
FqElement fq_from_int(const FieldPtr& f, int64_t a);
FqElement fq_generator(const FieldPtr& f);  // the class of X (requires r >= 2)
FqElement fq_pow(const FqElement& a, uint64_t e);
FqElement fq_div(const FqElement& a, const FqElement& b);

/// a^p; the r-fold iterate is the identity.
FqElement frobenius(const FqElement& a);

/// Smallest d >= 1 with a^{p^d} = a; divides r.
int degree_over_prime(const FqElement& a);

/// Index of an element in the canonical enumeration (sum c_i p^i), and back.
uint64_t fq_index(const FqElement& a);
FqElement fq_from_index(const FieldPtr& f, uint64_t idx);

/// Parse the comma-separated residue encoding.
FqElement fq_parse(const FieldPtr& f, const std::string& text);

/// Image of a under the canonical embedding F_{p^a} -> F_{p^b} (a | b):
/// the source generator maps to the root of the source modulus with the
/// smallest encoding. Cached per field pair.
FqElement embed(const FqElement& a, const FieldPtr& target);

/// Evaluate a polynomial with F_p coefficients at a field element.
FqElement fp_eval_fq(const FpPoly& poly, const FqElement& x);

}  // namespace canonlift
