#include "qunip/laurent.hpp"

#include "qunip/errors.hpp"

#include <algorithm>

namespace qunip {

Laurent::Laurent(Poly p, int low) : low_(low), p_(std::move(p)) { normalize(); }

void Laurent::normalize()
{
    if (p_.is_zero()) {
        low_ = 0;
        return;
    }
    if (int k = p_.low_degree(); k > 0) {
        p_ = p_.shift_down(k);
        low_ += k;
    }
}

Laurent Laurent::q_pow(int k, std::int64_t c) { return Laurent(Poly(c), k); }

Laurent Laurent::from_scalar(const ScalarQ& x)
{
    check(x.is_integral_laurent(), "value is not in Z[q, q^-1]");
    return Laurent(x.num(), x.shift());
}

ScalarQ Laurent::to_scalar() const { return ScalarQ::fraction(p_, Poly(1), low_); }

Laurent Laurent::bar() const
{
    if (is_zero())
        return {};
    return Laurent(p_.reversed(), -high());
}

Laurent Laurent::shifted(int k) const
{
    Laurent r = *this;
    if (!r.is_zero())
        r.low_ += k;
    return r;
}

Laurent Laurent::div_exact(const Laurent& d) const
{
    if (is_zero())
        return {};
    return Laurent(Poly::div_exact(p_, d.p_), low_ - d.low_);
}

Laurent operator+(const Laurent& a, const Laurent& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    int s = std::min(a.low_, b.low_);
    return Laurent(a.p_.shift_up(a.low_ - s) + b.p_.shift_up(b.low_ - s), s);
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    return Laurent(a.p_ * b.p_, a.low_ + b.low_);
}

} // namespace qunip
