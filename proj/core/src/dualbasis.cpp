#include "qunip/dualbasis.hpp"

#include "qunip/errors.hpp"

#include <mutex>

namespace qunip {

namespace {

void collect(const ReducedWord& w, std::size_t k, RootVec rest, LusztigDatum& cur, std::vector<LusztigDatum>& out)
{
    if (k == w.size()) {
        if (rest.is_zero())
            out.push_back(cur);
        return;
    }
    const RootVec& b = w.beta(k);
    for (int n = 0;; ++n) {
        cur[k] = n;
        collect(w, k + 1, rest, cur, out);
        rest -= b;
        bool ok = true;
        for (std::size_t i = 0; i < rest.size(); ++i)
            ok = ok && rest[i] >= 0;
        if (!ok)
            break;
    }
    cur[k] = 0;
}

LusztigDatum unit(std::size_t l, int k, int c)
{
    LusztigDatum v(l, 0);
    v[static_cast<std::size_t>(k - 1)] = c;
    return v;
}

} // namespace

ScalarQ PBWVector::coordinate(const LusztigDatum& c) const
{
    auto it = coords_.find(c);
    return it == coords_.end() ? ScalarQ() : it->second;
}

void PBWVector::set(const LusztigDatum& c, const ScalarQ& v)
{
    if (v.is_zero())
        coords_.erase(c);
    else
        coords_[c] = v;
}

int cform(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c, const LusztigDatum& cp)
{
    if (c.size() != w.size() || cp.size() != w.size())
        throw ValidationError("Lusztig datum has the wrong length");
    int s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        for (std::size_t l = 0; l < k; ++l)
            s += c[k] * cp[l] * datum.form(w.beta(k), w.beta(l));
        s -= c[k] * cp[k] * datum.form(w.beta(k), w.beta(k)) / 2;
    }
    return s;
}

int nform_pair(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c, const LusztigDatum& cp)
{
    return cform(datum, w, c, cp) - cform(datum, w, cp, c);
}

int leading_exponent(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c, const LusztigDatum& cp)
{
    int diag = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
        diag += c[k] * cp[k] * datum.form(w.beta(k), w.beta(k));
    return -cform(datum, w, c, cp) - diag;
}

RootVec lusztig_weight(const ReducedWord& w, const LusztigDatum& c, int rank)
{
    if (c.size() != w.size())
        throw ValidationError("Lusztig datum has the wrong length");
    RootVec wt(static_cast<std::size_t>(rank));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 0)
            throw ValidationError("Lusztig data must be non-negative");
        wt += c[k] * w.beta(k);
    }
    return wt;
}

std::vector<LusztigDatum> lusztig_data(const ReducedWord& w, const RootVec& wt)
{
    std::vector<LusztigDatum> out;
    LusztigDatum cur(w.size(), 0);
    collect(w, 0, wt, cur, out);
    return out;
}

ScalarQ pbw_lnorm(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c)
{
    ScalarQ r(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        int d = datum.d(w.letter(k));
        for (int s = 1; s <= c[k]; ++s)
            r /= ScalarQ(1) - ScalarQ::q_pow(2 * d * s);
    }
    return r;
}

std::size_t DualCanonical::PBWData::index(const LusztigDatum& c) const
{
    for (std::size_t k = 0; k < data.size(); ++k)
        if (data[k] == c)
            return k;
    throw ValidationError("Lusztig datum not found in its weight space");
}

RootVec DualCanonical::weight_of(const DualVec& x) const
{
    return RootVec(x.content());
}

std::shared_ptr<const DualCanonical::PBWData> DualCanonical::pbw_data(const ReducedWord& w, const RootVec& wt,
                                                                      int e) const
{
    if (e != 1 && e != -1)
        throw ValidationError("sign must be +1 or -1");
    auto key = std::make_tuple(w.letters(), e, wt.c);
    {
        std::shared_lock lock(mutex_);
        if (auto it = pbw_cache_.find(key); it != pbw_cache_.end())
            return it->second;
    }
    auto d = build_pbw(w, wt, e);
    std::unique_lock lock(mutex_);
    return pbw_cache_.try_emplace(key, std::move(d)).first->second;
}

std::shared_ptr<const DualCanonical::DCBData> DualCanonical::dcb_data(const ReducedWord& w, const RootVec& wt,
                                                                      int e) const
{
    auto key = std::make_tuple(w.letters(), e, wt.c);
    {
        std::shared_lock lock(mutex_);
        if (auto it = dcb_cache_.find(key); it != dcb_cache_.end())
            return it->second;
    }
    auto d = build_dcb(pbw_data(w, wt, e), wt);
    std::unique_lock lock(mutex_);
    return dcb_cache_.try_emplace(key, std::move(d)).first->second;
}

std::vector<ScalarQ> DualCanonical::upper_coords(const PBWData& d, const DualVec& x)
{
    std::vector<ScalarQ> vals(d.pivots.size());
    for (std::size_t p = 0; p < d.pivots.size(); ++p)
        vals[p] = x.value(d.pivots[p]);
    std::vector<ScalarQ> u(d.data.size());
    for (std::size_t k = 0; k < d.data.size(); ++k)
        for (std::size_t p = 0; p < d.pivots.size(); ++p)
            if (!d.pivot[k][p].is_zero() && !vals[p].is_zero())
                u[k] += d.pivot[k][p] * vals[p];
    return u;
}

void DualCanonical::check_member(const PBWData& d, const std::vector<ScalarQ>& u, const DualVec& x)
{
    DualVec rest = x;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero())
            rest -= (u[k] / d.norms[k]) * d.pbw[k];
    if (!rest.is_zero())
        throw ValidationError("element is not in the span of the PBW basis of this word");
}

std::vector<ScalarQ> DualCanonical::peel(const DCBData& d, std::vector<ScalarQ> u, std::size_t below)
{
    std::vector<ScalarQ> out(u.size());
    for (std::size_t k = u.size(); k-- > 0;) {
        if (u[k].is_zero())
            continue;
        check(k < below, "dual canonical expansion reaches an unbuilt element");
        out[k] = u[k];
        for (std::size_t j = 0; j <= k; ++j)
            if (!d.upper[k][j].is_zero())
                u[j] -= out[k] * d.upper[k][j];
    }
    return out;
}

std::shared_ptr<const DualCanonical::PBWData> DualCanonical::build_pbw(const ReducedWord& w, const RootVec& wt,
                                                                       int e) const
{
    auto d = std::make_shared<PBWData>();
    d->data = lusztig_data(w, wt);
    auto wb = alg_.weight_basis(wt.c);
    d->pivots = wb->pivots;
    for (const auto& c : d->data) {
        DualVec f = braid_.pbw_dual(w, c, e);
        auto coords = alg_.normal_form(f);
        ScalarQ norm;
        for (std::size_t p = 0; p < coords.size(); ++p)
            if (!coords[p].is_zero())
                norm += coords[p] * f.value(d->pivots[p]);
        check(!norm.is_zero(), "PBW monomial has zero norm");
        d->pbw.push_back(std::move(f));
        d->pivot.push_back(std::move(coords));
        d->norms.push_back(norm);
    }
    return d;
}

std::shared_ptr<const DualCanonical::DCBData> DualCanonical::build_dcb(std::shared_ptr<const PBWData> p,
                                                                       const RootVec& wt) const
{
    auto d = std::make_shared<DCBData>();
    d->pbw = p;
    const std::size_t n = p->data.size();
    std::vector<DualVec> up;
    for (std::size_t k = 0; k < n; ++k)
        up.push_back(p->norms[k].inverse() * p->pbw[k]);

    // Increasing lex order: sigma(F^up(c)) - F^up(c) = sum (bar(phi) - phi) B^up(c').
    for (std::size_t k = 0; k < n; ++k) {
        auto s = upper_coords(*p, up[k].bar());
        check(s[k] == ScalarQ(1), "sigma(F^up(c)) has a non-unit leading coordinate");
        for (std::size_t j = k + 1; j < n; ++j)
            check(s[j].is_zero(), "sigma(F^up(c)) is not lower triangular");
        s[k] = ScalarQ();
        auto g = peel(*d, s, k);
        std::vector<ScalarQ> upper(n);
        upper[k] = ScalarQ(1);
        Expansion phi;
        for (std::size_t j = 0; j < k; ++j) {
            if (g[j].is_zero())
                continue;
            check(g[j].is_integral_laurent(), "bar-antisymmetric coefficient is not in Z[q, q^-1]");
            check(g[j].bar() == -g[j], "coefficient of sigma(F^up(c)) - F^up(c) is not bar-antisymmetric");
            ScalarQ ph = -g[j].positive_part();
            phi[p->data[j]] = ph;
            for (std::size_t m = 0; m <= j; ++m)
                if (!d->upper[j][m].is_zero())
                    upper[m] -= ph * d->upper[j][m];
        }
        DualVec b = alg_.zero(wt.c);
        for (std::size_t j = 0; j <= k; ++j)
            if (!upper[j].is_zero())
                b += upper[j] * up[j];
        check(b.bar() == b, "dual canonical element is not sigma-fixed");
        d->upper.push_back(std::move(upper));
        d->phi.push_back(std::move(phi));
        d->dcb.push_back(std::move(b));
    }
    return d;
}

std::optional<int> DualCanonical::dcb_exponent(const DualVec& x, const ReducedWord& w, int e,
                                               const LusztigDatum& c) const
{
    if (x.is_zero())
        return std::nullopt;
    auto d = pbw_data(w, weight_of(x), e);
    auto u = upper_coords(*d, x);
    check_member(*d, u, x);
    const ScalarQ& lead = u[d->index(c)];
    if (lead.is_zero() || !lead.is_monomial() || lead != ScalarQ::q_pow(lead.shift()))
        return std::nullopt;
    int k = lead.shift();
    ScalarQ scale = ScalarQ::q_pow(-k);
    // q^-k x is sigma-fixed with coordinates in delta_c + qZ[q]: only B^up(c) qualifies.
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j].is_zero() || d->data[j] == c)
            continue;
        ScalarQ a = scale * u[j];
        if (!a.is_integral_laurent() || !a.is_regular_at_0() || a.eval0() != 0)
            return std::nullopt;
    }
    DualVec y = scale * x;
    if (!(y.bar() == y))
        return std::nullopt;
    return k;
}

ScalarQ DualCanonical::pbw_norm(const ReducedWord& w, const LusztigDatum& c, int e) const
{
    auto d = pbw_data(w, lusztig_weight(w, c, alg_.rank()), e);
    return d->norms[d->index(c)];
}

DualVec DualCanonical::dual_pbw_dual(const ReducedWord& w, const LusztigDatum& c, int e) const
{
    auto d = pbw_data(w, lusztig_weight(w, c, alg_.rank()), e);
    std::size_t k = d->index(c);
    return d->norms[k].inverse() * d->pbw[k];
}

WordElt DualCanonical::dual_pbw(const ReducedWord& w, const LusztigDatum& c, int e) const
{
    return alg_.to_words(dual_pbw_dual(w, c, e));
}

Expansion DualCanonical::dual_pbw_coordinates(const DualVec& x, const ReducedWord& w, int e) const
{
    auto d = pbw_data(w, weight_of(x), e);
    auto u = upper_coords(*d, x);
    Expansion out;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero())
            out[d->data[k]] = u[k];
    return out;
}

PBWVector DualCanonical::pbw_coordinates(const DualVec& x, const ReducedWord& w, int e) const
{
    auto d = pbw_data(w, weight_of(x), e);
    auto u = upper_coords(*d, x);
    PBWVector out(w, e);
    DualVec rest = x;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k].is_zero())
            continue;
        ScalarQ a = u[k] / d->norms[k];
        out.set(d->data[k], a);
        rest -= a * d->pbw[k];
    }
    if (!rest.is_zero())
        throw ValidationError("element is not in the span of the PBW basis of this word");
    return out;
}

PBWVector DualCanonical::pbw_coordinates(const WordElt& x, const ReducedWord& w, int e) const
{
    if (x.is_zero())
        return PBWVector(w, e);
    return pbw_coordinates(alg_.dual(x), w, e);
}

PBWVector DualCanonical::straighten(const ReducedWord& w, int j, int k, int cj, int ck, int e) const
{
    if (!(1 <= j && j < k && k <= static_cast<int>(w.size())))
        throw ValidationError("straightening needs 1 <= j < k <= length");
    if (cj < 0 || ck < 0)
        throw ValidationError("exponents must be non-negative");
    DualVec fj = braid_.pbw_dual(w, unit(w.size(), j, cj), e);
    DualVec fk = braid_.pbw_dual(w, unit(w.size(), k, ck), e);
    int pair = cj * ck * alg_.datum().form(w.beta(static_cast<std::size_t>(j - 1)), w.beta(static_cast<std::size_t>(k - 1)));
    DualVec x = alg_.product(fk, fj) - ScalarQ::q_pow(-pair) * alg_.product(fj, fk);
    return pbw_coordinates(x, w, e);
}

Expansion DualCanonical::straighten_dual(const ReducedWord& w, int j, int k, int cj, int ck, int e) const
{
    if (!(1 <= j && j < k && k <= static_cast<int>(w.size())))
        throw ValidationError("straightening needs 1 <= j < k <= length");
    DualVec fj = dual_pbw_dual(w, unit(w.size(), j, cj), e);
    DualVec fk = dual_pbw_dual(w, unit(w.size(), k, ck), e);
    int pair = cj * ck * alg_.datum().form(w.beta(static_cast<std::size_t>(j - 1)), w.beta(static_cast<std::size_t>(k - 1)));
    DualVec x = alg_.product(fk, fj) - ScalarQ::q_pow(-pair) * alg_.product(fj, fk);
    pbw_coordinates(x, w, e);
    return dual_pbw_coordinates(x, w, e);
}

DCBElement DualCanonical::element(const ReducedWord& w, int e, const DCBData& dd, std::size_t k) const
{
    const PBWData& d = *dd.pbw;
    DCBElement b;
    b.c = d.data[k];
    b.pbw = PBWVector(w, e);
    for (std::size_t j = 0; j <= k; ++j) {
        if (dd.upper[k][j].is_zero())
            continue;
        b.upper[d.data[j]] = dd.upper[k][j];
        b.pbw.set(d.data[j], dd.upper[k][j] / d.norms[j]);
    }
    b.phi = dd.phi[k];
    b.dual = dd.dcb[k];
    return b;
}

DCBElement DualCanonical::dual_canonical(const ReducedWord& w, const LusztigDatum& c, int e) const
{
    auto d = dcb_data(w, lusztig_weight(w, c, alg_.rank()), e);
    return element(w, e, *d, d->pbw->index(c));
}

std::vector<DCBElement> DualCanonical::dual_canonical_weight(const ReducedWord& w, const RootVec& wt, int e) const
{
    auto d = dcb_data(w, wt, e);
    std::vector<DCBElement> out;
    for (std::size_t k = 0; k < d->pbw->data.size(); ++k)
        out.push_back(element(w, e, *d, k));
    return out;
}

Expansion DualCanonical::expand(const DualVec& x, const ReducedWord& w, int e) const
{
    auto d = dcb_data(w, weight_of(x), e);
    const PBWData& p = *d->pbw;
    auto u = upper_coords(p, x);
    check_member(p, u, x);
    auto g = peel(*d, std::move(u), p.data.size());
    Expansion out;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!g[k].is_zero())
            out[p.data[k]] = g[k];
    return out;
}

Expansion DualCanonical::expand_product(const DCBElement& b1, const DCBElement& b2) const
{
    if (!(b1.word() == b2.word()) || b1.sign() != b2.sign())
        throw ValidationError("dual canonical elements from different contexts");
    return expand(alg_.product(b1.dual, b2.dual), b1.word(), b1.sign());
}

std::optional<std::pair<LusztigDatum, int>> DualCanonical::single_term(const Expansion& x)
{
    if (x.size() != 1)
        return std::nullopt;
    const auto& [c, a] = *x.begin();
    if (!a.is_monomial() || a != ScalarQ::q_pow(a.shift()))
        return std::nullopt;
    return std::make_pair(c, a.shift());
}

bool DualCanonical::is_compatible(const DCBElement& b1, const DCBElement& b2) const
{
    return single_term(expand_product(b1, b2)).has_value();
}

bool DualCanonical::is_real(const DCBElement& b, int m_max) const
{
    DualVec acc = b.dual;
    for (int m = 2; m <= m_max; ++m) {
        acc = alg_.product(acc, b.dual);
        if (!single_term(expand(acc, b.word(), b.sign())))
            return false;
    }
    return true;
}

RestrictionExpansion DualCanonical::ir_divided_on_dcb(int i, int m, const DCBElement& b) const
{
    const RootDatum& datum = alg_.datum();
    if (i < 0 || i >= datum.rank())
        throw ValidationError("index out of range");
    if (m < 0)
        throw ValidationError("exponent must be non-negative");
    if (!datum.is_finite_type())
        throw DomainError("restriction expansion needs a finite type datum");
    RestrictionExpansion out;
    out.word = ReducedWord(datum, extend_to_longest(datum, b.word().letters()));
    out.epsilon = alg_.ir_depth(i, b.dual);
    if (m > out.epsilon)
        return out;
    DualVec x = b.dual;
    for (int n = 0; n < m; ++n)
        x = alg_.ir(i, x);
    x *= qfact(m, datum.d(i)).inverse();
    out.terms = expand(x, out.word, b.sign());
    return out;
}

std::vector<int> DualCanonical::string_data(const ReducedWord& w, const DualVec& x) const
{
    std::vector<int> out;
    DualVec cur = x;
    for (int i : w.letters()) {
        int n = alg_.ir_depth(i, cur);
        check(n >= 0, "string data of zero");
        for (int s = 0; s < n; ++s)
            cur = alg_.ir(i, cur);
        cur *= qfact(n, alg_.datum().d(i)).inverse();
        out.push_back(n);
    }
    return out;
}

Expansion DualCanonical::string_extremal_terms(const DCBElement& b1, const DCBElement& b2) const
{
    const ReducedWord& w = b1.word();
    auto bound = string_data(w, b1.dual);
    auto s2 = string_data(w, b2.dual);
    for (std::size_t k = 0; k < bound.size(); ++k)
        bound[k] += s2[k];
    Expansion out;
    for (const auto& [c, v] : expand_product(b1, b2))
        if (string_data(w, dual_canonical(w, c, b1.sign()).dual) == bound)
            out.emplace(c, v);
    return out;
}

} // namespace qunip
