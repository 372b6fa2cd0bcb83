#pragma once

#include "qunip/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qunip {

// Exact element of Q(q), stored as q^shift * num(q) / den(q) in canonical form:
// num(0) != 0 and den(0) != 0 (unless zero), gcd(num, den) = 1 in Q[q],
// the contents of num and den are coprime, and den has a positive leading coefficient.
// Equal values have identical representations.
class ScalarQ {
public:
    ScalarQ() = default;
    ScalarQ(std::int64_t n); // NOLINT(google-explicit-constructor): integers embed implicitly
    ScalarQ(const mpq_class& r);

    static ScalarQ q_pow(int k);
    // q^shift * num / den, canonicalized.
    static ScalarQ fraction(Poly num, Poly den, int shift = 0);
    // Sum of c_k q^(low + k).
    static ScalarQ laurent(const std::vector<std::int64_t>& coeffs, int low);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    // Membership in Q[q, q^-1].
    bool is_laurent() const { return den_.is_constant(); }
    // Membership in Z[q, q^-1].
    bool is_integral_laurent() const { return den_.is_one(); }
    // Membership in A_0: the rational function has no pole at q = 0.
    bool is_regular_at_0() const { return is_zero() || shift_ >= 0; }
    // Value at q = 0; DomainError when not regular there.
    mpq_class eval0() const;
    // True iff the value is c * q^k for some rational c != 0.
    bool is_monomial() const { return num_.degree() == 0 && den_.is_constant(); }

    int shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    // Laurent-only accessors (InternalError otherwise).
    int min_exponent() const;
    int max_exponent() const;
    mpq_class coeff(int k) const;
    // Terms with exponent > 0 (Laurent only).
    ScalarQ positive_part() const;

    ScalarQ bar() const;
    ScalarQ inverse() const;
    ScalarQ times_q_pow(int k) const;

    ScalarQ operator-() const;
    friend ScalarQ operator+(const ScalarQ& a, const ScalarQ& b);
    friend ScalarQ operator-(const ScalarQ& a, const ScalarQ& b);
    friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b);
    friend ScalarQ operator/(const ScalarQ& a, const ScalarQ& b);
    ScalarQ& operator+=(const ScalarQ& o);
    ScalarQ& operator-=(const ScalarQ& o);
    ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }
    ScalarQ& operator/=(const ScalarQ& o) { return *this = *this / o; }

    friend bool operator==(const ScalarQ& a, const ScalarQ& b)
    {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ScalarQ& a, const ScalarQ& b) { return !(a == b); }

    // "(num)/(den)" with explicit integer exponents, e.g. "(q^-1+q^1)/(1)".
    std::string to_string() const;
    static ScalarQ parse(std::string_view text);

private:
    void canonicalize();

    int shift_ = 0;
    Poly num_;
    Poly den_{1};
};

std::ostream& operator<<(std::ostream& os, const ScalarQ& x);

// [n]_d = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
ScalarQ qint(int n, int d);
// [n]_d! ; DomainError for n < 0.
ScalarQ qfact(int n, int d);
// Gaussian binomial [n choose k]_d ; DomainError unless 0 <= k <= n.
ScalarQ qbinom(int n, int k, int d);

} // namespace qunip
