#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qunip {

// Dense polynomial in q with integer coefficients (index k holds the q^k coefficient).
// Coefficients live in int64 while they fit and move to GMP integers on overflow.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::int64_t c);
    explicit Poly(std::vector<std::int64_t> coeffs);
    explicit Poly(std::vector<mpz_class> coeffs);

    static Poly monomial(std::int64_t c, int k);

    bool is_zero() const { return small_ ? s_.empty() : b_.empty(); }
    int degree() const { return static_cast<int>(small_ ? s_.size() : b_.size()) - 1; }
    int low_degree() const;
    bool is_one() const { return small_ && s_.size() == 1 && s_[0] == 1; }
    bool is_constant() const { return degree() <= 0; }
    bool is_small() const { return small_; }

    mpz_class coeff(int k) const;
    int coeff_sign(int k) const;
    int lead_sign() const { return coeff_sign(degree()); }
    // int64 view; only valid when is_small().
    const std::vector<std::int64_t>& small_coeffs() const { return s_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly shift_up(int k) const;
    Poly shift_down(int k) const; // exact division by q^k
    Poly reversed() const;        // q^deg p(1/q)
    Poly scaled(const mpz_class& c) const;
    Poly div_scalar_exact(const mpz_class& c) const;
    mpz_class content() const; // positive, 0 for the zero polynomial

    // Exact quotient in Z[q]; throws InternalError when b does not divide a.
    static Poly div_exact(const Poly& a, const Poly& b);
    // Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
    static Poly gcd(const Poly& a, const Poly& b);

    std::vector<mpz_class> big_coeffs() const;

private:
    void normalize();
    void demote_if_possible();

    bool small_ = true;
    std::vector<std::int64_t> s_;
    std::vector<mpz_class> b_;
};

} // namespace qunip
