#pragma once

#include "popcrit/rat.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace popcrit {

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);  // NOLINT: constants convert implicitly
    Poly(int c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs);

    static Poly x() { return Poly(std::vector<Rat>{0, 1}); }
    static Poly monomial(int k, const Rat& c = 1);
    static Poly linear_root(const Rat& z);  // x - z
    // Either an expression in x ("x^2 - 1/2*x + 3") or ascending coefficients ("3 -1/2 1").
    static Poly parse(const std::string& text);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    Rat lead() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator*(Poly a, int s) { return a *= Rat(s); }
    friend Poly operator*(int s, Poly a) { return a *= Rat(s); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int k = 1) const;
    Rat eval(const Rat& t) const;
    Poly pow(unsigned e) const;
    Poly monic() const;
    // p(x + z)
    Poly shift(const Rat& z) const;
    // Lowest k with nonzero coefficient; -1 for zero.
    int valuation() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Exact quotient; throws NotDivisible.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
// Monic gcd (zero iff both are zero).
Poly gcd(const Poly& a, const Poly& b);
bool is_squarefree(const Poly& p);
Poly squarefree_part(const Poly& p);
bool proportional(const Poly& a, const Poly& b);
// Square root with positive leading coefficient, if one exists over Q.
std::optional<Poly> poly_sqrt(const Poly& p);

Poly product(const std::vector<Poly>& ps);

}  // namespace popcrit
