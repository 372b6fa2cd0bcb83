#include "qunip/dualvec.hpp"

#include "qunip/errors.hpp"

namespace qunip {

DualVec::DualVec(std::shared_ptr<const WordSpace> space) : space_(std::move(space))
{
    vals_.resize(space_->size());
}

ScalarQ DualVec::value(const Word& w) const
{
    std::size_t k = space_->index(w);
    if (k == WordSpace::npos)
        return {};
    return value(k);
}

bool DualVec::is_zero() const
{
    for (const auto& v : vals_)
        if (!v.is_zero())
            return false;
    return true;
}

std::size_t DualVec::support() const
{
    std::size_t n = 0;
    for (const auto& v : vals_)
        n += !v.is_zero();
    return n;
}

DualVec DualVec::from_values(std::shared_ptr<const WordSpace> space, const std::vector<ScalarQ>& values)
{
    DualVec r(std::move(space));
    check(values.size() == r.size(), "DualVec::from_values: size mismatch");
    Poly denom(1);
    mpz_class dcontent = 1;
    for (const auto& v : values) {
        if (v.is_zero() || v.den().is_one())
            continue;
        mpz_class c = v.den().content();
        mpz_lcm(dcontent.get_mpz_t(), dcontent.get_mpz_t(), c.get_mpz_t());
        Poly prim = v.den().div_scalar_exact(c);
        if (prim.degree() > 0) {
            Poly g = Poly::gcd(denom, prim);
            denom = denom * Poly::div_exact(prim, g);
        }
    }
    Poly full = denom.scaled(dcontent);
    ScalarQ mult = ScalarQ::fraction(full, Poly(1));
    for (std::size_t k = 0; k < values.size(); ++k)
        if (!values[k].is_zero())
            r.vals_[k] = Laurent::from_scalar(values[k] * mult);
    r.scale_ = mult.inverse();
    return r;
}

void DualVec::absorb_scale()
{
    if (scale_.is_one())
        return;
    if (!scale_.is_integral_laurent())
        return;
    Laurent s = Laurent::from_scalar(scale_);
    for (auto& v : vals_)
        if (!v.is_zero())
            v = v * s;
    scale_ = ScalarQ(1);
}

std::vector<Laurent> DualVec::integral_entries() const
{
    if (scale_.is_one())
        return vals_;
    std::vector<Laurent> out(vals_.size());
    if (scale_.is_integral_laurent()) {
        Laurent s = Laurent::from_scalar(scale_);
        for (std::size_t k = 0; k < vals_.size(); ++k)
            if (!vals_[k].is_zero())
                out[k] = vals_[k] * s;
        return out;
    }
    for (std::size_t k = 0; k < vals_.size(); ++k)
        if (!vals_[k].is_zero())
            out[k] = Laurent::from_scalar(value(k));
    return out;
}

DualVec DualVec::bar() const
{
    DualVec r = *this;
    for (auto& v : r.vals_)
        v = v.bar();
    r.scale_ = scale_.bar();
    return r;
}

DualVec DualVec::operator-() const
{
    DualVec r = *this;
    for (auto& v : r.vals_)
        v = -v;
    return r;
}

DualVec& DualVec::operator+=(const DualVec& o)
{
    if (!space_) {
        *this = o;
        return *this;
    }
    check(o.space_ && o.content() == content(), "DualVec: adding different weights");
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        vals_ = o.vals_;
        scale_ = o.scale_;
        return *this;
    }
    if (scale_ == o.scale_) {
        for (std::size_t k = 0; k < vals_.size(); ++k)
            if (!o.vals_[k].is_zero())
                vals_[k] += o.vals_[k];
        return *this;
    }
    ScalarQ r = o.scale_ / scale_;
    if (r.is_integral_laurent()) {
        Laurent f = Laurent::from_scalar(r);
        for (std::size_t k = 0; k < vals_.size(); ++k)
            if (!o.vals_[k].is_zero())
                vals_[k] += f * o.vals_[k];
        return *this;
    }
    ScalarQ rinv = r.inverse();
    if (rinv.is_integral_laurent()) {
        Laurent f = Laurent::from_scalar(rinv);
        for (std::size_t k = 0; k < vals_.size(); ++k)
            vals_[k] = f * vals_[k] + o.vals_[k];
        scale_ = o.scale_;
        return *this;
    }
    // r = q^s n / d with n, d integer polynomials
    Laurent n(r.num(), r.shift()), d(r.den(), 0);
    for (std::size_t k = 0; k < vals_.size(); ++k)
        vals_[k] = d * vals_[k] + n * o.vals_[k];
    scale_ = scale_ / d.to_scalar();
    return *this;
}

DualVec& DualVec::operator-=(const DualVec& o) { return *this += -o; }

DualVec& DualVec::operator*=(const ScalarQ& c)
{
    if (c.is_zero()) {
        for (auto& v : vals_)
            v = Laurent();
        scale_ = ScalarQ(1);
        return *this;
    }
    if (c.is_integral_laurent())
        return mul_laurent(Laurent::from_scalar(c));
    scale_ *= c;
    return *this;
}

DualVec& DualVec::mul_laurent(const Laurent& c)
{
    for (auto& v : vals_)
        if (!v.is_zero())
            v = v * c;
    return *this;
}

bool operator==(const DualVec& a, const DualVec& b)
{
    if (a.content() != b.content())
        return false;
    if (a.scale_ == b.scale_)
        return a.vals_ == b.vals_;
    ScalarQ r = b.scale_ / a.scale_;
    Laurent n(r.num(), r.shift()), d(r.den(), 0);
    for (std::size_t k = 0; k < a.vals_.size(); ++k)
        if (d * a.vals_[k] != n * b.vals_[k])
            return false;
    return true;
}

bool DualVec::proportional_by_q_power(const DualVec& a, const DualVec& b, int& k)
{
    if (a.content() != b.content())
        return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a.vals_[j].is_zero() && b.vals_[j].is_zero())
            continue;
        if (a.vals_[j].is_zero() || b.vals_[j].is_zero())
            return false;
        ScalarQ r = a.value(j) / b.value(j);
        if (!r.is_monomial() || !r.is_integral_laurent() || r.num() != Poly(1))
            return false;
        k = r.shift();
        DualVec c = b;
        c *= ScalarQ::q_pow(k);
        return a == c;
    }
    k = 0;
    return true;
}

} // namespace qunip
