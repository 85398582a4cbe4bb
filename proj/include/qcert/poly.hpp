#ifndef QCERT_POLY_HPP
#define QCERT_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcert/rational.hpp"

namespace qcert {

/// Dense univariate polynomial with exact rational coefficients.
/// Invariant: empty coefficient vector means the zero polynomial; otherwise
/// the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(Rational(1)); }
    static Polynomial constant(const Rational& r);
    static Polynomial monomial(const Rational& coeff, int exp);
    /// The variable itself, x.
    static Polynomial var() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// Number of nonzero coefficients.
    int nonzero_count() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scaled(const Rational& s) const;
    /// Multiply by x^k (k >= 0).
    Polynomial shifted(int k) const;
    /// Substitute x -> x^d (d >= 1).
    Polynomial inflated(int d) const;

    Rational eval(const Rational& x) const;

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Content of the zero polynomial is defined as 1.
    Rational content() const;
    /// this == content() * primitive_part(), primitive part has positive
    /// integer-coprime coefficients up to the sign of the leading term.
    Polynomial primitive_part() const;
    Polynomial monic() const;

    std::string str(const std::string& var = "q") const;
    std::vector<std::string> coeff_strings() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Exact quotient and remainder: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b);

/// Quotient when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> poly_divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor. gcd(a, 0) = monic(a); both zero is an error.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct ExtGcdResult {
    Polynomial g, s, t; // s*a + t*m == g
};

/// Extended Euclid over Q[x]; g is monic. If g == 1 then s is the inverse of
/// a modulo m.
ExtGcdResult poly_ext_gcd(const Polynomial& a, const Polynomial& m);

/// True iff gcd(a, b) is constant. Decided by a modular probe when possible
/// (a single prime image with constant gcd is a proof of coprimality);
/// falls back to the exact gcd.
bool poly_coprime(const Polynomial& a, const Polynomial& b);

} // namespace qcert

#endif
