#include "qunip/braid.hpp"

#include "qunip/errors.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace qunip {

TriElt TriElt::monomial(const Word& f, const RootVec& mu, const Word& e, const ScalarQ& c)
{
    TriElt x;
    x.add_term({f, mu, e}, c);
    return x;
}

TriElt TriElt::from_lower(const WordElt& x, int rank)
{
    TriElt r;
    RootVec zero(static_cast<std::size_t>(rank));
    for (const auto& [w, c] : x.terms())
        r.add_term({w, zero, Word()}, c);
    return r;
}

void TriElt::add_term(const TriKey& k, const ScalarQ& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool TriElt::is_lower() const
{
    for (const auto& [k, c] : terms_)
        if (!k.e.empty() || !k.mu.is_zero())
            return false;
    return true;
}

WordElt TriElt::lower_part() const
{
    WordElt r;
    for (const auto& [k, c] : terms_)
        if (k.e.empty() && k.mu.is_zero())
            r.add_term(k.f, c);
    return r;
}

TriElt& TriElt::operator+=(const TriElt& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

TriElt& TriElt::operator-=(const TriElt& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

TriElt& TriElt::operator*=(const ScalarQ& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

std::string TriElt::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.to_string();
        if (!k.f.empty())
            os << "*f[" << k.f.to_string() << "]";
        if (!k.mu.is_zero()) {
            os << "*t[";
            for (std::size_t a = 0; a < k.mu.size(); ++a)
                os << (a ? "," : "") << k.mu[a];
            os << "]";
        }
        if (!k.e.empty())
            os << "*e[" << k.e.to_string() << "]";
    }
    return os.str();
}

int BraidEngine::form_content(const RootVec& mu, const Word& w) const
{
    int s = 0;
    for (int k = 0; k < w.len; ++k) {
        int b = w.letter(k);
        for (int a = 0; a < rank(); ++a)
            if (mu[static_cast<std::size_t>(a)] != 0)
                s += mu[static_cast<std::size_t>(a)] * alg_.datum().form_simple(a, b);
    }
    return s;
}

// e_a f_F = f_F e_a + sum_{F_p = a} f_{F<p} f_{F>p} (q^-c t_a - q^c t_a^-1) / (q_a - q_a^-1),
// with c = (alpha_a, wt of F>p) after moving the torus factor to the right.
std::vector<BraidEngine::Term> BraidEngine::commute_letter(int a, const Word& f) const
{
    const RootDatum& d = alg_.datum();
    RootVec zero(static_cast<std::size_t>(rank()));
    RootVec ta = d.simple(a);
    std::vector<Term> out;
    out.push_back({f, zero, Word::letter_word(a), ScalarQ(1)});
    ScalarQ denom = (ScalarQ::q_pow(d.d(a)) - ScalarQ::q_pow(-d.d(a))).inverse();
    int c = 0;
    for (int p = f.len - 1; p >= 0; --p) {
        if (f.letter(p) == a) {
            Word rest = f.erase(p);
            out.push_back({rest, ta, Word(), ScalarQ::q_pow(-c) * denom});
            out.push_back({rest, -ta, Word(), -(ScalarQ::q_pow(c) * denom)});
        }
        c += d.form_simple(a, f.letter(p));
    }
    return out;
}

std::shared_ptr<const std::vector<BraidEngine::Term>> BraidEngine::commute(const Word& e, const Word& f) const
{
    auto key = std::make_pair(e, f);
    {
        std::shared_lock lock(mutex_);
        if (auto it = commute_.find(key); it != commute_.end())
            return it->second;
    }
    std::map<TriKey, ScalarQ> acc;
    auto add = [&](TriKey k, const ScalarQ& c) {
        auto [it, fresh] = acc.try_emplace(std::move(k), c);
        if (!fresh)
            it->second += c;
    };
    if (e.empty() || f.empty()) {
        add({f, RootVec(static_cast<std::size_t>(rank())), e}, ScalarQ(1));
    } else {
        // e_E' e_a f_F: commute the last e-letter first, then the prefix through each result.
        Word prefix = e.drop_last();
        for (const auto& t : commute_letter(e.last(), f)) {
            auto sub = commute(prefix, t.f);
            for (const auto& s : *sub)
                add({s.f, s.mu + t.mu, s.e + t.e}, s.c * t.c * ScalarQ::q_pow(-form_content(t.mu, s.e)));
        }
    }
    auto out = std::make_shared<std::vector<Term>>();
    for (auto& [k, c] : acc)
        if (!c.is_zero())
            out->push_back({k.f, k.mu, k.e, c});
    std::unique_lock lock(mutex_);
    return commute_.try_emplace(key, std::move(out)).first->second;
}

TriElt BraidEngine::product_raw(const TriElt& a, const TriElt& b) const
{
    TriElt r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            // f_A t_mu (e_E f_F) t_nu e_E'
            for (const auto& s : *commute(ka.e, kb.f)) {
                int shift = -form_content(ka.mu, s.f) - form_content(kb.mu, s.e);
                r.add_term({ka.f + s.f, ka.mu + s.mu + kb.mu, s.e + kb.e}, ca * cb * s.c * ScalarQ::q_pow(shift));
            }
        }
    return r;
}

TriElt BraidEngine::product(const TriElt& a, const TriElt& b) const { return reduce(product_raw(a, b)); }

TriElt BraidEngine::normal_order(const std::vector<Generator>& gens) const
{
    TriElt acc = TriElt::one(rank());
    for (const auto& g : gens) {
        TriElt x;
        switch (g.kind) {
        case Generator::Kind::F:
            x = TriElt::f(rank(), g.index);
            break;
        case Generator::Kind::E:
            x = TriElt::e(rank(), g.index);
            break;
        case Generator::Kind::T:
            x = TriElt::t(g.mu);
            break;
        }
        acc = product_raw(acc, x);
    }
    return acc;
}

TriElt BraidEngine::reduce(const TriElt& x) const
{
    // f-side: group by (mu, e), reduce each group to pivots.
    std::map<std::pair<RootVec, Word>, WordElt> fgroups;
    for (const auto& [k, c] : x.terms())
        fgroups[{k.mu, k.e}].add_term(k.f, c);
    std::map<std::pair<Word, RootVec>, WordElt> egroups;
    for (const auto& [key, fe] : fgroups) {
        WordElt red = alg_.reduce(fe);
        for (const auto& [w, c] : red.terms())
            egroups[{w, key.first}].add_term(key.second, c);
    }
    // e-side: U^+ and U^- share their relations under e_i <-> f_i.
    TriElt r;
    for (const auto& [key, ee] : egroups) {
        WordElt red = alg_.reduce(ee);
        for (const auto& [w, c] : red.terms())
            r.add_term({key.first, key.second, w}, c);
    }
    return r;
}

TriElt BraidEngine::generator_image(int i, int e, const Generator& g) const
{
    check(e == 1 || e == -1, "braid sign must be +1 or -1");
    const RootDatum& d = alg_.datum();
    const int di = d.d(i);
    RootVec zero(static_cast<std::size_t>(rank()));
    RootVec ai = d.simple(i);
    if (g.kind == Generator::Kind::T)
        return TriElt::t(d.reflect(i, g.mu));
    const bool is_f = g.kind == Generator::Kind::F;
    const int j = g.index;
    if (j == i) {
        if (e == 1) {
            // T_i(f_i) = -t_i^-1 e_i, T_i(e_i) = -f_i t_i
            return is_f ? TriElt::monomial(Word(), -ai, Word::letter_word(i), ScalarQ(-1))
                        : TriElt::monomial(Word::letter_word(i), ai, Word(), ScalarQ(-1));
        }
        // T_i^-1(f_i) = -e_i t_i = -q_i^-2 t_i e_i, T_i^-1(e_i) = -t_i^-1 f_i = -q_i^2 f_i t_i^-1
        return is_f ? TriElt::monomial(Word(), ai, Word::letter_word(i), -ScalarQ::q_pow(-2 * di))
                    : TriElt::monomial(Word::letter_word(i), -ai, Word(), -ScalarQ::q_pow(2 * di));
    }
    const int m = -d.cartan(i, j);
    TriElt out;
    for (int r = 0; r <= m; ++r) {
        int s = m - r;
        ScalarQ c = ScalarQ(r % 2 ? -1 : 1) * (qfact(r, di) * qfact(s, di)).inverse();
        // f-side: T_i has f_i^(r) f_j f_i^(s) with q_i^r; T_i^-1 has f_i^(s) f_j f_i^(r) with q_i^r.
        // e-side: T_i has e_i^(s) e_j e_i^(r) with q_i^-r; T_i^-1 has e_i^(r) e_j e_i^(s) with q_i^-r.
        int left = (is_f == (e == 1)) ? r : s;
        std::vector<int> letters(static_cast<std::size_t>(left), i);
        letters.push_back(j);
        letters.insert(letters.end(), static_cast<std::size_t>(m - left), i);
        Word w(letters);
        c *= ScalarQ::q_pow(is_f ? di * r : -di * r);
        if (is_f)
            out.add_term({w, zero, Word()}, c);
        else
            out.add_term({Word(), zero, w}, c);
    }
    return out;
}

TriElt BraidEngine::braid_T(int i, int e, const TriElt& x) const
{
    check(i >= 0 && i < rank(), "braid index out of range");
    std::map<int, TriElt> fimg, eimg;
    for (int a = 0; a < rank(); ++a) {
        fimg[a] = generator_image(i, e, {Generator::Kind::F, a, {}});
        eimg[a] = generator_image(i, e, {Generator::Kind::E, a, {}});
    }
    TriElt out;
    for (const auto& [k, c] : x.terms()) {
        TriElt acc = TriElt::one(rank());
        for (int p = 0; p < k.f.len; ++p)
            acc = product(acc, fimg[k.f.letter(p)]);
        acc = product_raw(acc, TriElt::t(alg_.datum().reflect(i, k.mu)));
        for (int p = 0; p < k.e.len; ++p)
            acc = product(acc, eimg[k.e.letter(p)]);
        out += c * acc;
    }
    return reduce(out);
}

WordElt BraidEngine::braid_T(int i, int e, const WordElt& x) const
{
    TriElt r = braid_T(i, e, TriElt::from_lower(x, rank()));
    check(r.is_lower(), "braid image left U_q^-");
    return r.lower_part();
}

WordElt BraidEngine::root_vector(const ReducedWord& w, int k, int e, int c) const
{
    if (k < 1 || k > static_cast<int>(w.size()))
        throw ValidationError("root vector index out of range");
    if (e != 1 && e != -1)
        throw ValidationError("sign must be +1 or -1");
    if (c < 1)
        throw ValidationError("root vector multiplicity must be positive");
    if (c > 1)
        return alg_.to_words(root_vector_dual(w, k, e, c));
    std::vector<int> prefix(w.letters().begin(), w.letters().begin() + k);
    auto key = std::make_tuple(prefix, k, e);
    {
        std::shared_lock lock(mutex_);
        if (auto it = roots_.find(key); it != roots_.end())
            return *it->second;
    }
    WordElt x = WordElt::generator(w.letter(static_cast<std::size_t>(k - 1)));
    for (int j = k - 2; j >= 0; --j)
        x = braid_T(w.letter(static_cast<std::size_t>(j)), e, x);
    check(x.content(rank()) == w.beta(static_cast<std::size_t>(k - 1)).c, "root vector has the wrong weight");
    auto ptr = std::make_shared<const WordElt>(std::move(x));
    std::unique_lock lock(mutex_);
    return *roots_.try_emplace(key, std::move(ptr)).first->second;
}

DualVec BraidEngine::root_vector_dual(const ReducedWord& w, int k, int e, int c) const
{
    DualVec base = alg_.dual(root_vector(w, k, e, 1));
    DualVec acc = base;
    for (int n = 1; n < c; ++n)
        acc = alg_.product(acc, base);
    if (c > 1) {
        int di = alg_.datum().d(w.letter(static_cast<std::size_t>(k - 1)));
        acc *= qfact(c, di).inverse();
    }
    return acc;
}

DualVec BraidEngine::pbw_dual(const ReducedWord& w, const std::vector<int>& c, int e) const
{
    if (c.size() != w.size())
        throw ValidationError("PBW exponent has the wrong length");
    if (e != 1 && e != -1)
        throw ValidationError("sign must be +1 or -1");
    RootVec wt(static_cast<std::size_t>(rank()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 0)
            throw ValidationError("PBW exponents must be non-negative");
        wt += c[k] * w.beta(k);
    }
    if (height(wt) > alg_.max_height())
        throw BoundExceeded("PBW monomial of height " + std::to_string(height(wt)) + " exceeds the height bound " +
                            std::to_string(alg_.max_height()));
    DualVec acc = alg_.unit();
    for (std::size_t n = 0; n < c.size(); ++n) {
        std::size_t k = e == 1 ? n : c.size() - 1 - n;
        if (c[k] > 0)
            acc = alg_.product(acc, root_vector_dual(w, static_cast<int>(k) + 1, e, c[k]));
    }
    return acc;
}

WordElt BraidEngine::pbw_monomial(const ReducedWord& w, const std::vector<int>& c, int e) const
{
    return alg_.to_words(pbw_dual(w, c, e));
}

} // namespace qunip
