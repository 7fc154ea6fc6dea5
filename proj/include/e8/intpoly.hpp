#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace e8 {

// Dense integer polynomial, coefficients ascending (c[k] multiplies T^k).
// Kept normalized: no trailing zero limbs except for the zero polynomial,
// which is represented by an empty vector.
struct IntPoly {
    std::vector<mpz_class> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { normalize(); }
    static IntPoly from_ints(const std::vector<long>& v);

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }  // -1 for zero poly
    const mpz_class& leading() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    bool is_palindromic() const;

    mpz_class eval(const mpz_class& x) const;
    mpz_class coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : mpz_class(0); }

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly derivative(const IntPoly& a);

// Quotient of a by monic b; throws if the division leaves a remainder.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Removes (T - 1)^k exactly.  Throws if (T - 1)^k does not divide a.
// Callers that need the stripped polynomial to be regular at 1 check
// eval(1) themselves; this routine only performs the exact division.
IntPoly strip_unit_eigenvalue(const IntPoly& a, int k);

// For palindromic a of even degree 2m, returns q of degree m with
// a(T) = T^m * q(T + 1/T).  Throws if a is not palindromic of even degree.
IntPoly reciprocal_transform(const IntPoly& a);

// Canonical text format, used for files and hashing:
//   line 1: "deg <d>"
//   then d+1 lines "<k> <coefficient>" with k ascending 0..d
// A writer/reader round trip is byte-identical.
std::string poly_to_text(const IntPoly& a);
IntPoly poly_from_text(const std::string& text);
void write_poly_file(const std::string& path, const IntPoly& a);
IntPoly read_poly_file(const std::string& path);

}  // namespace e8
