#pragma once

#include "qunip/poly.hpp"
#include "qunip/scalar.hpp"

#include <cstdint>
#include <vector>

namespace qunip {

// Element of Z[q, q^-1]: q^low * p(q) with p(0) != 0 unless zero.
class Laurent {
public:
    Laurent() = default;
    Laurent(std::int64_t c) : p_(c) {} // NOLINT(google-explicit-constructor)
    Laurent(Poly p, int low);

    static Laurent q_pow(int k, std::int64_t c = 1);
    // InternalError unless x is in Z[q, q^-1].
    static Laurent from_scalar(const ScalarQ& x);

    bool is_zero() const { return p_.is_zero(); }
    int low() const { return low_; }
    int high() const { return low_ + p_.degree(); }
    const Poly& poly() const { return p_; }
    bool is_small() const { return p_.is_small(); }
    mpz_class coeff(int k) const { return p_.coeff(k - low_); }

    ScalarQ to_scalar() const;
    Laurent bar() const;
    Laurent shifted(int k) const;
    // Exact division; InternalError when d does not divide.
    Laurent div_exact(const Laurent& d) const;

    Laurent operator-() const { return Laurent(-p_, low_); }
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.p_ == b.p_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

private:
    void normalize();

    int low_ = 0;
    Poly p_;
};

} // namespace qunip
