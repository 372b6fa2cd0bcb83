#include "qunip/scalar.hpp"

#include "qunip/errors.hpp"

#include <cctype>
#include <ostream>
#include <utility>
#include <vector>

namespace qunip {

ScalarQ::ScalarQ(std::int64_t n) : num_(n) { canonicalize(); }

ScalarQ::ScalarQ(const mpq_class& r)
{
    num_ = Poly(std::vector<mpz_class>{r.get_num()});
    den_ = Poly(std::vector<mpz_class>{r.get_den()});
    canonicalize();
}

ScalarQ ScalarQ::q_pow(int k)
{
    ScalarQ r(1);
    r.shift_ = k;
    return r;
}

ScalarQ ScalarQ::fraction(Poly num, Poly den, int shift)
{
    ScalarQ r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.shift_ = shift;
    r.canonicalize();
    return r;
}

ScalarQ ScalarQ::laurent(const std::vector<std::int64_t>& coeffs, int low)
{
    ScalarQ r;
    r.num_ = Poly(coeffs);
    r.shift_ = low;
    r.canonicalize();
    return r;
}

void ScalarQ::canonicalize()
{
    if (den_.is_zero())
        throw DomainError("ScalarQ: zero denominator");
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly(1);
        return;
    }
    if (int k = num_.low_degree(); k > 0) {
        num_ = num_.shift_down(k);
        shift_ += k;
    }
    if (int j = den_.low_degree(); j > 0) {
        den_ = den_.shift_down(j);
        shift_ -= j;
    }
    if (den_.is_one())
        return;
    if (den_.is_constant()) {
        mpz_class c = den_.coeff(0);
        mpz_class a = abs(c);
        mpz_class g;
        mpz_class cn = num_.content();
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), a.get_mpz_t());
        num_ = num_.div_scalar_exact(c < 0 ? mpz_class(-g) : g);
        den_ = Poly(std::vector<mpz_class>{a / g});
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    mpz_class cn = num_.content(), cd = den_.content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c > 1) {
        num_ = num_.div_scalar_exact(c);
        den_ = den_.div_scalar_exact(c);
    }
    if (den_.lead_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

mpq_class ScalarQ::eval0() const
{
    if (is_zero() || shift_ > 0)
        return 0;
    if (shift_ < 0)
        throw DomainError("eval0: not regular at q = 0");
    mpq_class r(num_.coeff(0), den_.coeff(0));
    r.canonicalize();
    return r;
}

int ScalarQ::min_exponent() const
{
    check(is_laurent(), "min_exponent on a non-Laurent scalar");
    return shift_;
}

int ScalarQ::max_exponent() const
{
    check(is_laurent(), "max_exponent on a non-Laurent scalar");
    return shift_ + num_.degree();
}

mpq_class ScalarQ::coeff(int k) const
{
    check(is_laurent(), "coeff on a non-Laurent scalar");
    mpq_class r(num_.coeff(k - shift_), den_.coeff(0));
    r.canonicalize();
    return r;
}

ScalarQ ScalarQ::positive_part() const
{
    check(is_laurent(), "positive_part on a non-Laurent scalar");
    if (is_zero() || max_exponent() <= 0)
        return {};
    int start = std::max(0, 1 - shift_);
    std::vector<mpz_class> c;
    for (int k = start; k <= num_.degree(); ++k)
        c.push_back(num_.coeff(k));
    return fraction(Poly(std::move(c)), den_, shift_ + start);
}

ScalarQ ScalarQ::bar() const
{
    if (is_zero())
        return {};
    ScalarQ r;
    r.num_ = num_.reversed();
    r.den_ = den_.reversed();
    r.shift_ = -shift_ - num_.degree() + den_.degree();
    if (r.den_.lead_sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

ScalarQ ScalarQ::inverse() const
{
    if (is_zero())
        throw DomainError("ScalarQ: division by zero");
    ScalarQ r;
    r.num_ = den_;
    r.den_ = num_;
    r.shift_ = -shift_;
    if (r.den_.lead_sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    if (r.den_.is_constant() && !r.den_.is_one())
        r.canonicalize();
    return r;
}

ScalarQ ScalarQ::times_q_pow(int k) const
{
    ScalarQ r = *this;
    if (!r.is_zero())
        r.shift_ += k;
    return r;
}

ScalarQ ScalarQ::operator-() const
{
    ScalarQ r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarQ& ScalarQ::operator+=(const ScalarQ& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    int s = std::min(shift_, o.shift_);
    Poly a = num_.shift_up(shift_ - s);
    Poly b = o.num_.shift_up(o.shift_ - s);
    if (den_ == o.den_) {
        num_ = a + b;
        shift_ = s;
        if (den_.is_one()) {
            if (num_.is_zero())
                shift_ = 0;
            else if (int k = num_.low_degree(); k > 0) {
                num_ = num_.shift_down(k);
                shift_ += k;
            }
            return *this;
        }
    } else {
        num_ = a * o.den_ + b * den_;
        den_ = den_ * o.den_;
        shift_ = s;
    }
    canonicalize();
    return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& o) { return *this += -o; }

ScalarQ operator+(const ScalarQ& a, const ScalarQ& b)
{
    ScalarQ r = a;
    r += b;
    return r;
}

ScalarQ operator-(const ScalarQ& a, const ScalarQ& b)
{
    ScalarQ r = a;
    r += -b;
    return r;
}

ScalarQ operator*(const ScalarQ& a, const ScalarQ& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    ScalarQ r;
    r.num_ = a.num_ * b.num_;
    r.shift_ = a.shift_ + b.shift_;
    if (a.den_.is_one() && b.den_.is_one())
        return r;
    if (a.den_.is_one())
        r.den_ = b.den_;
    else if (b.den_.is_one())
        r.den_ = a.den_;
    else
        r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

ScalarQ operator/(const ScalarQ& a, const ScalarQ& b) { return a * b.inverse(); }

namespace {

void append_poly(std::string& out, const Poly& p, int shift)
{
    if (p.is_zero()) {
        out += "0";
        return;
    }
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff_sign(k) == 0)
            continue;
        mpz_class c = p.coeff(k);
        int e = k + shift;
        std::string term;
        if (e == 0)
            term = c.get_str();
        else if (c == 1)
            term = "q^" + std::to_string(e);
        else if (c == -1)
            term = "-q^" + std::to_string(e);
        else
            term = c.get_str() + "*q^" + std::to_string(e);
        if (!first && term[0] != '-')
            out += '+';
        out += term;
        first = false;
    }
}

class Parser {
public:
    explicit Parser(std::string_view s)
    {
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                text_ += ch;
    }

    ScalarQ run()
    {
        ScalarQ r;
        if (!text_.empty() && text_[0] == '(') {
            ScalarQ n = group();
            if (peek() == '/') {
                ++pos_;
                ScalarQ d = group();
                r = n / d;
            } else {
                r = n;
            }
        } else {
            r = laurent_sum();
        }
        if (pos_ != text_.size())
            fail();
        return r;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    [[noreturn]] void fail() const { throw ValidationError("cannot parse scalar: '" + text_ + "'"); }

    ScalarQ group()
    {
        if (peek() != '(')
            fail();
        ++pos_;
        ScalarQ r = laurent_sum();
        if (peek() != ')')
            fail();
        ++pos_;
        return r;
    }

    mpz_class integer()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail();
        return mpz_class(text_.substr(start, pos_ - start));
    }

    int exponent()
    {
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        mpz_class e = integer();
        if (!e.fits_sint_p())
            fail();
        return neg ? -static_cast<int>(e.get_si()) : static_cast<int>(e.get_si());
    }

    ScalarQ laurent_sum()
    {
        ScalarQ total;
        bool first = true;
        while (true) {
            char c = peek();
            bool neg = false;
            if (c == '+' || c == '-') {
                neg = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            mpz_class coef = 1;
            int e = 0;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef = integer();
                if (peek() == '*') {
                    ++pos_;
                    if (peek() != 'q')
                        fail();
                }
            }
            if (peek() == 'q') {
                ++pos_;
                e = 1;
                if (peek() == '^') {
                    ++pos_;
                    e = exponent();
                }
            } else if (coef == 1 && !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) {
                fail();
            }
            ScalarQ term = ScalarQ(mpq_class(neg ? mpz_class(-coef) : coef)).times_q_pow(e);
            total += term;
            c = peek();
            if (c != '+' && c != '-')
                break;
        }
        return total;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string ScalarQ::to_string() const
{
    std::string out = "(";
    append_poly(out, num_, shift_);
    out += ")/(";
    append_poly(out, den_, 0);
    out += ")";
    return out;
}

ScalarQ ScalarQ::parse(std::string_view text) { return Parser(text).run(); }

std::ostream& operator<<(std::ostream& os, const ScalarQ& x) { return os << x.to_string(); }

ScalarQ qint(int n, int d)
{
    if (n < 0)
        return -qint(-n, d);
    if (n == 0)
        return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(2 * d * (n - 1)) + 1, 0);
    for (int k = 0; k < n; ++k)
        c[static_cast<std::size_t>(2 * d * k)] = 1;
    return ScalarQ::laurent(c, -d * (n - 1));
}

ScalarQ qfact(int n, int d)
{
    if (n < 0)
        throw DomainError("qfact: negative argument");
    ScalarQ r(1);
    for (int k = 2; k <= n; ++k)
        r *= qint(k, d);
    return r;
}

ScalarQ qbinom(int n, int k, int d)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("qbinom: need 0 <= k <= n");
    std::vector<ScalarQ> row{ScalarQ(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<ScalarQ> next(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            ScalarQ v;
            if (j < m)
                v += row[j].times_q_pow(-d * j);
            if (j > 0)
                v += row[j - 1].times_q_pow(d * (m - j));
            next[j] = v;
        }
        row = std::move(next);
    }
    return row[k];
}

} // namespace qunip
