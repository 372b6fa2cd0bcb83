#include "qunip/poly.hpp"

#include "qunip/errors.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace qunip {

namespace {

bool add_to(std::int64_t& acc, std::int64_t x) { return !__builtin_add_overflow(acc, x, &acc); }
bool sub_from(std::int64_t& acc, std::int64_t x) { return !__builtin_sub_overflow(acc, x, &acc); }
bool addmul(std::int64_t& acc, std::int64_t x, std::int64_t y)
{
    std::int64_t p;
    if (__builtin_mul_overflow(x, y, &p))
        return false;
    return add_to(acc, p);
}

bool add_to(mpz_class& acc, const mpz_class& x) { acc += x; return true; }
bool sub_from(mpz_class& acc, const mpz_class& x) { acc -= x; return true; }
bool addmul(mpz_class& acc, const mpz_class& x, const mpz_class& y)
{
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return true;
}

template <class T>
bool add_kernel(const std::vector<T>& a, const std::vector<T>& b, std::vector<T>& out, bool subtract)
{
    out.assign(std::max(a.size(), b.size()), T(0));
    std::copy(a.begin(), a.end(), out.begin());
    for (std::size_t k = 0; k < b.size(); ++k)
        if (!(subtract ? sub_from(out[k], b[k]) : add_to(out[k], b[k])))
            return false;
    return true;
}

template <class T>
bool mul_kernel(const std::vector<T>& a, const std::vector<T>& b, std::vector<T>& out)
{
    out.assign(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!addmul(out[i + j], a[i], b[j]))
                return false;
    }
    return true;
}

std::vector<mpz_class> to_big(const std::vector<std::int64_t>& s)
{
    std::vector<mpz_class> r;
    r.reserve(s.size());
    for (auto c : s) {
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), c);
        r.push_back(std::move(z));
    }
    return r;
}

} // namespace

Poly::Poly(std::int64_t c)
{
    if (c != 0)
        s_.push_back(c);
}

Poly::Poly(std::vector<std::int64_t> coeffs) : s_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::vector<mpz_class> coeffs) : small_(false), b_(std::move(coeffs))
{
    normalize();
    demote_if_possible();
}

Poly Poly::monomial(std::int64_t c, int k)
{
    if (c == 0)
        return {};
    std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::normalize()
{
    if (small_)
        while (!s_.empty() && s_.back() == 0)
            s_.pop_back();
    else
        while (!b_.empty() && b_.back() == 0)
            b_.pop_back();
}

void Poly::demote_if_possible()
{
    if (small_)
        return;
    for (const auto& c : b_)
        if (!c.fits_slong_p())
            return;
    s_.clear();
    s_.reserve(b_.size());
    for (const auto& c : b_)
        s_.push_back(c.get_si());
    b_.clear();
    small_ = true;
}

std::vector<mpz_class> Poly::big_coeffs() const { return small_ ? to_big(s_) : b_; }

int Poly::low_degree() const
{
    if (small_) {
        for (std::size_t k = 0; k < s_.size(); ++k)
            if (s_[k] != 0)
                return static_cast<int>(k);
    } else {
        for (std::size_t k = 0; k < b_.size(); ++k)
            if (b_[k] != 0)
                return static_cast<int>(k);
    }
    return -1;
}

mpz_class Poly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    if (small_) {
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), s_[k]);
        return z;
    }
    return b_[k];
}

int Poly::coeff_sign(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    if (small_)
        return (s_[k] > 0) - (s_[k] < 0);
    return sgn(b_[k]);
}

Poly Poly::operator-() const
{
    Poly r;
    if (small_) {
        r.s_.reserve(s_.size());
        for (auto c : s_) {
            if (c == std::numeric_limits<std::int64_t>::min())
                return Poly(to_big(s_)).operator-();
            r.s_.push_back(-c);
        }
        return r;
    }
    r.small_ = false;
    r.b_.reserve(b_.size());
    for (const auto& c : b_)
        r.b_.push_back(-c);
    r.demote_if_possible();
    return r;
}

Poly operator+(const Poly& a, const Poly& b)
{
    Poly r;
    if (a.small_ && b.small_ && add_kernel(a.s_, b.s_, r.s_, false)) {
        r.normalize();
        return r;
    }
    r.small_ = false;
    add_kernel(a.big_coeffs(), b.big_coeffs(), r.b_, false);
    r.normalize();
    r.demote_if_possible();
    return r;
}

Poly operator-(const Poly& a, const Poly& b)
{
    Poly r;
    if (a.small_ && b.small_ && add_kernel(a.s_, b.s_, r.s_, true)) {
        r.normalize();
        return r;
    }
    r.small_ = false;
    add_kernel(a.big_coeffs(), b.big_coeffs(), r.b_, true);
    r.normalize();
    r.demote_if_possible();
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    Poly r;
    if (a.small_ && b.small_ && mul_kernel(a.s_, b.s_, r.s_)) {
        r.normalize();
        return r;
    }
    r.small_ = false;
    mul_kernel(a.big_coeffs(), b.big_coeffs(), r.b_);
    r.normalize();
    r.demote_if_possible();
    return r;
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.small_ && b.small_)
        return a.s_ == b.s_;
    if (a.degree() != b.degree())
        return false;
    for (int k = 0; k <= a.degree(); ++k)
        if (a.coeff(k) != b.coeff(k))
            return false;
    return true;
}

Poly Poly::shift_up(int k) const
{
    if (is_zero() || k == 0)
        return *this;
    Poly r = *this;
    if (small_)
        r.s_.insert(r.s_.begin(), static_cast<std::size_t>(k), 0);
    else
        r.b_.insert(r.b_.begin(), static_cast<std::size_t>(k), mpz_class(0));
    return r;
}

Poly Poly::shift_down(int k) const
{
    if (is_zero() || k == 0)
        return *this;
    check(low_degree() >= k, "Poly::shift_down: not divisible by q^k");
    Poly r = *this;
    if (small_)
        r.s_.erase(r.s_.begin(), r.s_.begin() + k);
    else
        r.b_.erase(r.b_.begin(), r.b_.begin() + k);
    return r;
}

Poly Poly::reversed() const
{
    Poly r = *this;
    if (small_)
        std::reverse(r.s_.begin(), r.s_.end());
    else
        std::reverse(r.b_.begin(), r.b_.end());
    r.normalize();
    return r;
}

Poly Poly::scaled(const mpz_class& c) const
{
    if (c == 0 || is_zero())
        return {};
    auto v = big_coeffs();
    for (auto& x : v)
        x *= c;
    return Poly(std::move(v));
}

Poly Poly::div_scalar_exact(const mpz_class& c) const
{
    if (c == 1)
        return *this;
    auto v = big_coeffs();
    for (auto& x : v) {
        check(mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()) != 0, "Poly::div_scalar_exact: inexact");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return Poly(std::move(v));
}

mpz_class Poly::content() const
{
    mpz_class g = 0;
    if (small_) {
        std::uint64_t acc = 0;
        for (auto c : s_) {
            std::uint64_t a = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
            while (a != 0) {
                acc %= a;
                std::swap(acc, a);
            }
        }
        mpz_class z;
        mpz_set_ui(z.get_mpz_t(), acc);
        return z;
    }
    for (const auto& c : b_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Poly Poly::div_exact(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.is_zero())
        return {};
    if (b.degree() == 0)
        return a.div_scalar_exact(b.coeff(0));
    auto r = a.big_coeffs();
    auto d = b.big_coeffs();
    int n = a.degree(), m = b.degree();
    check(n >= m, "Poly::div_exact: degree too small");
    std::vector<mpz_class> q(static_cast<std::size_t>(n - m) + 1);
    const mpz_class& lc = d.back();
    for (int k = n - m; k >= 0; --k) {
        mpz_class& top = r[k + m];
        if (top == 0)
            continue;
        check(mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()) != 0, "Poly::div_exact: inexact");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (int j = 0; j <= m; ++j)
            mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
        q[k] = std::move(c);
    }
    for (const auto& x : r)
        check(x == 0, "Poly::div_exact: nonzero remainder");
    return Poly(std::move(q));
}

namespace {

std::vector<mpz_class> primitive(std::vector<mpz_class> v)
{
    mpz_class g = 0;
    for (const auto& c : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : v)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return v;
}

void trim(std::vector<mpz_class>& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

// Pseudo-remainder of a by b (both nonzero, deg a >= deg b).
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b)
{
    const std::size_t m = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a)
            c *= lb;
        for (std::size_t j = 0; j <= m; ++j)
            mpz_submul(a[shift + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
    }
    return a;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero() && b.is_zero())
        return {};
    auto x = primitive(a.big_coeffs());
    auto y = primitive(b.big_coeffs());
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        auto r = prem(x, y);
        x = std::move(y);
        y = primitive(std::move(r));
    }
    x = primitive(std::move(x));
    if (x.back() < 0)
        for (auto& c : x)
            c = -c;
    return Poly(std::move(x));
}

} // namespace qunip
