#include "qunip/wordelt.hpp"

#include "qunip/errors.hpp"

namespace qunip {

WordElt WordElt::word(const Word& w, const ScalarQ& c)
{
    WordElt x;
    x.add_term(w, c);
    return x;
}

WordElt WordElt::divided_power(const RootDatum& datum, int i, int n)
{
    return word(Word(std::vector<int>(static_cast<std::size_t>(n), i)), qfact(n, datum.d(i)).inverse());
}

ScalarQ WordElt::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? ScalarQ() : it->second;
}

void WordElt::add_term(const Word& w, const ScalarQ& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::vector<int> WordElt::content(int rank) const
{
    check(!terms_.empty(), "content of the zero element");
    auto c = terms_.begin()->first.content(rank);
    for (const auto& [w, _] : terms_)
        check(w.content(rank) == c, "element is not homogeneous");
    return c;
}

bool WordElt::is_homogeneous(int rank) const
{
    if (terms_.empty())
        return true;
    auto c = terms_.begin()->first.content(rank);
    for (const auto& [w, _] : terms_)
        if (w.content(rank) != c)
            return false;
    return true;
}

std::map<std::vector<int>, WordElt> WordElt::components(int rank) const
{
    std::map<std::vector<int>, WordElt> out;
    for (const auto& [w, c] : terms_)
        out[w.content(rank)].terms_.emplace(w, c);
    return out;
}

RootVec WordElt::weight(int rank) const
{
    auto c = content(rank);
    for (int& x : c)
        x = -x;
    return RootVec(c);
}

WordElt WordElt::operator-() const
{
    WordElt r = *this;
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

WordElt& WordElt::operator+=(const WordElt& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

WordElt& WordElt::operator-=(const WordElt& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

WordElt& WordElt::operator*=(const ScalarQ& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_)
        x *= c;
    return *this;
}

WordElt operator*(const WordElt& a, const WordElt& b)
{
    WordElt r;
    for (const auto& [u, x] : a.terms_)
        for (const auto& [v, y] : b.terms_)
            r.add_term(u + v, x * y);
    return r;
}

WordElt multiply(const WordElt& x, const WordElt& y) { return x * y; }

WordElt WordElt::star() const
{
    WordElt r;
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w.reversed(), c);
    return r;
}

WordElt WordElt::barinv() const
{
    WordElt r;
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, c.bar());
    return r;
}

std::string WordElt::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.to_string() + "*[" + w.to_string() + "]";
    }
    return s;
}

WordElt ir(const RootDatum& datum, int i, const WordElt& x)
{
    WordElt r;
    for (const auto& [w, c] : x.terms()) {
        int e = 0;
        for (int m = 0; m < w.len; ++m) {
            int a = w.letter(m);
            if (a == i)
                r.add_term(w.erase(m), c.times_q_pow(-e));
            e += datum.form_simple(a, i);
        }
    }
    return r;
}

WordElt ri(const RootDatum& datum, int i, const WordElt& x)
{
    WordElt r;
    for (const auto& [w, c] : x.terms()) {
        int e = 0;
        for (int m = w.len - 1; m >= 0; --m) {
            int a = w.letter(m);
            if (a == i)
                r.add_term(w.erase(m), c.times_q_pow(-e));
            e += datum.form_simple(a, i);
        }
    }
    return r;
}

WordElt sigma(const RootDatum& datum, const WordElt& x)
{
    if (x.is_zero())
        return x;
    return ScalarQ::q_pow(datum.nform(x.weight(datum.rank()))) * x.barinv().star();
}

std::vector<TensorTerm> rform(const RootDatum& datum, const WordElt& x)
{
    std::map<std::pair<Word, Word>, ScalarQ> acc;
    for (const auto& [w, c] : x.terms()) {
        check(w.len <= 20, "rform: word too long");
        const auto letters = w.letters();
        const std::uint32_t full = (std::uint32_t{1} << w.len) - 1;
        for (std::uint32_t s = 0; s <= full; ++s) {
            std::vector<int> left, right;
            int e = 0;
            for (int b = 0; b < w.len; ++b) {
                if (s & (1u << b)) {
                    left.push_back(letters[b]);
                    for (int a = 0; a < b; ++a)
                        if (!(s & (1u << a)))
                            e += datum.form_simple(letters[a], letters[b]);
                } else {
                    right.push_back(letters[b]);
                }
            }
            auto key = std::make_pair(Word(left), Word(right));
            auto& slot = acc[key];
            slot += c.times_q_pow(-e);
        }
    }
    std::vector<TensorTerm> out;
    for (auto& [k, c] : acc)
        if (!c.is_zero())
            out.push_back({k.first, k.second, c});
    return out;
}

namespace {

ScalarQ kform_rec(const RootDatum& datum, const WordElt::Terms& x, const WordElt& y)
{
    if (x.empty() || y.is_zero())
        return {};
    ScalarQ total;
    std::map<int, WordElt::Terms> by_first;
    for (const auto& [w, c] : x) {
        if (w.empty())
            total += c * y.coeff(Word());
        else
            by_first[w.first()].emplace(w.drop_first(), c);
    }
    for (const auto& [a, rest] : by_first)
        total += kform_rec(datum, rest, ir(datum, a, y));
    return total;
}

} // namespace

ScalarQ kform(const RootDatum& datum, const WordElt& x, const WordElt& y)
{
    return kform_rec(datum, x.terms(), y);
}

ScalarQ kl_factor(const RootDatum& datum, const std::vector<int>& content)
{
    ScalarQ r(1);
    for (int i = 0; i < datum.rank(); ++i) {
        ScalarQ f = ScalarQ(1) - ScalarQ::q_pow(2 * datum.d(i));
        for (int k = 0; k < content[i]; ++k)
            r *= f;
    }
    return r;
}

ScalarQ lform(const RootDatum& datum, const WordElt& x, const WordElt& y)
{
    ScalarQ k = kform(datum, x, y);
    if (k.is_zero())
        return k;
    return k / kl_factor(datum, x.content(datum.rank()));
}

WordElt serre_element(const RootDatum& datum, int i, int j)
{
    check(i != j, "Serre element needs distinct indices");
    const int m = 1 - datum.cartan(i, j);
    const int d = datum.d(i);
    WordElt r;
    for (int k = 0; k <= m; ++k) {
        std::vector<int> letters(static_cast<std::size_t>(k), i);
        letters.push_back(j);
        letters.insert(letters.end(), static_cast<std::size_t>(m - k), i);
        ScalarQ c = (qfact(k, d) * qfact(m - k, d)).inverse();
        r.add_term(Word(letters), k % 2 ? -c : c);
    }
    return r;
}

} // namespace qunip
