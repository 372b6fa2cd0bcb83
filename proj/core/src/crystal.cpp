#include "qunip/crystal.hpp"

#include "qunip/errors.hpp"

#include <algorithm>

namespace qunip {

namespace {

ExtInt at(const std::vector<ExtInt>& v, int i)
{
    return v[static_cast<std::size_t>(i)];
}

ExtInt plus(ExtInt a, int k)
{
    return a ? ExtInt(*a + k) : a;
}

ExtInt max_ext(ExtInt a, ExtInt b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return std::max(*a, *b);
}

// a >= b with -infinity below everything; -infinity >= -infinity.
bool ge(ExtInt a, ExtInt b)
{
    if (!b)
        return true;
    return a && *a >= *b;
}

} // namespace

ExtInt tensor_eps(const RootDatum& datum, int i, const CrystalStats& b1, const CrystalStats& b2)
{
    return max_ext(at(b1.eps, i), plus(at(b2.eps, i), -datum.pair(i, b1.wt)));
}

ExtInt tensor_phi(const RootDatum& datum, int i, const CrystalStats& b1, const CrystalStats& b2)
{
    return max_ext(at(b2.phi, i), plus(at(b1.phi, i), datum.pair(i, b2.wt)));
}

CrystalStats tensor_stats(const RootDatum& datum, const CrystalStats& b1, const CrystalStats& b2)
{
    CrystalStats s{b1.wt + b2.wt, {}, {}};
    for (int i = 0; i < datum.rank(); ++i) {
        s.eps.push_back(tensor_eps(datum, i, b1, b2));
        s.phi.push_back(tensor_phi(datum, i, b1, b2));
    }
    return s;
}

TensorSide tensor_etilde_side(int i, const CrystalStats& b1, const CrystalStats& b2)
{
    return ge(at(b1.phi, i), at(b2.eps, i)) ? TensorSide::Left : TensorSide::Right;
}

TensorSide tensor_ftilde_side(int i, const CrystalStats& b1, const CrystalStats& b2)
{
    ExtInt p = at(b1.phi, i), e = at(b2.eps, i);
    bool left = p && (!e || *p > *e);
    return left ? TensorSide::Left : TensorSide::Right;
}

TensorSplit tensor_etilde_split(int i, int n, const CrystalStats& b1, const CrystalStats& b2)
{
    ExtInt p = at(b1.phi, i), e = at(b2.eps, i);
    if (ge(p, e))
        return {n, 0};
    if (!p)
        return {0, n};
    int k = *e - *p;
    return k >= n ? TensorSplit{0, n} : TensorSplit{n - k, k};
}

TensorSplit tensor_ftilde_split(int i, int n, const CrystalStats& b1, const CrystalStats& b2)
{
    ExtInt p = at(b1.phi, i), e = at(b2.eps, i);
    if (ge(p, plus(e, n)))
        return {n, 0};
    if (ge(e, p))
        return {0, n};
    int k = *p - *e;
    return {k, n - k};
}

CrystalStats stats(const RootDatum& datum, const BiElt& b)
{
    CrystalStats s{b.n * datum.simple(b.i), std::vector<ExtInt>(static_cast<std::size_t>(datum.rank())),
                   std::vector<ExtInt>(static_cast<std::size_t>(datum.rank()))};
    s.eps[static_cast<std::size_t>(b.i)] = -b.n;
    s.phi[static_cast<std::size_t>(b.i)] = b.n;
    return s;
}

CrystalEngine::CrystalEngine(const DualCanonical& dc) : dc_(dc), alg_(dc.algebra())
{
    if (!alg_.datum().is_finite_type())
        throw DomainError("crystal computations need a finite type datum");
}

CrystalElt CrystalEngine::element(const ReducedWord& w, const LusztigDatum& c, int e) const
{
    if (c.size() != w.size())
        throw ValidationError("Lusztig datum has the wrong length");
    if (e != 1 && e != -1)
        throw ValidationError("sign must be +1 or -1");
    for (int x : c)
        if (x < 0)
            throw ValidationError("Lusztig data must be non-negative");
    ReducedWord w0(datum(), extend_to_longest(datum(), w.letters()));
    LusztigDatum full(w0.size(), 0);
    std::copy(c.begin(), c.end(), full.begin());
    return {w0, e, full};
}

CrystalElt CrystalEngine::u_infinity(const ReducedWord& w, int e) const
{
    return element(w, LusztigDatum(w.size(), 0), e);
}

bool CrystalEngine::is_u_infinity(const CrystalElt& b) const
{
    return std::all_of(b.c.begin(), b.c.end(), [](int x) { return x == 0; });
}

DualVec CrystalEngine::representative(const CrystalElt& b) const
{
    return dc_.braid().pbw_dual(b.word, b.c, b.e);
}

std::optional<CrystalElt> CrystalEngine::identify(const DualVec& x, const ReducedWord& w0, int e) const
{
    if (!x.space_ptr() || x.is_zero())
        return std::nullopt;
    auto coords = dc_.pbw_coordinates(x, w0, e);
    std::optional<CrystalElt> found;
    for (const auto& [c, a] : coords.coords()) {
        check(a.is_regular_at_0(), "element is not in L(infinity)");
        mpq_class v = a.eval0();
        if (v == 0)
            continue;
        check(v == 1 && !found, "class modulo qL(infinity) is not a crystal basis element");
        found = CrystalElt{w0, e, c};
    }
    return found;
}

DualVec CrystalEngine::upper_global(const CrystalElt& b) const
{
    return dc_.dual_canonical(b.word, b.c, b.e).dual;
}

RootVec CrystalEngine::wt(const CrystalElt& b) const
{
    return -lusztig_weight(b.word, b.c, datum().rank());
}

int CrystalEngine::eps(int i, const CrystalElt& b) const
{
    int n = 0;
    for (auto cur = etilde(i, b); cur; cur = etilde(i, *cur))
        ++n;
    return n;
}

int CrystalEngine::phi(int i, const CrystalElt& b) const
{
    return eps(i, b) + datum().pair(i, wt(b));
}

int CrystalEngine::eps_star(int i, const CrystalElt& b) const
{
    return eps(i, star(b));
}

int CrystalEngine::phi_star(int i, const CrystalElt& b) const
{
    return eps_star(i, b) + datum().pair(i, wt(b));
}

CrystalStats CrystalEngine::stats(const CrystalElt& b) const
{
    CrystalStats s{wt(b), {}, {}};
    for (int i = 0; i < datum().rank(); ++i) {
        int e = eps(i, b);
        s.eps.push_back(e);
        s.phi.push_back(e + datum().pair(i, s.wt));
    }
    return s;
}

std::optional<CrystalElt> CrystalEngine::etilde(int i, const CrystalElt& b) const
{
    return identify(alg_.etilde(i, representative(b)), b.word, b.e);
}

std::optional<CrystalElt> CrystalEngine::ftilde(int i, const CrystalElt& b) const
{
    return identify(alg_.ftilde(i, representative(b)), b.word, b.e);
}

std::optional<CrystalElt> CrystalEngine::etilde_star(int i, const CrystalElt& b) const
{
    return identify(alg_.etilde_star(i, representative(b)), b.word, b.e);
}

std::optional<CrystalElt> CrystalEngine::ftilde_star(int i, const CrystalElt& b) const
{
    return identify(alg_.ftilde_star(i, representative(b)), b.word, b.e);
}

CrystalElt CrystalEngine::star(const CrystalElt& b) const
{
    auto s = identify(alg_.star(representative(b)), b.word, b.e);
    check(s.has_value(), "star of a crystal element vanished");
    return *s;
}

CrystalElt CrystalEngine::etilde_pow(int i, int n, const CrystalElt& b) const
{
    CrystalElt cur = b;
    for (int k = 0; k < n; ++k) {
        auto next = etilde(i, cur);
        if (!next)
            throw DomainError("e_i power annihilates the element");
        cur = std::move(*next);
    }
    return cur;
}

CrystalElt CrystalEngine::ftilde_pow(int i, int n, const CrystalElt& b) const
{
    CrystalElt cur = b;
    for (int k = 0; k < n; ++k) {
        auto next = ftilde(i, cur);
        check(next.has_value(), "f_i annihilated an element of B(infinity)");
        cur = std::move(*next);
    }
    return cur;
}

CrystalElt CrystalEngine::etilde_star_pow(int i, int n, const CrystalElt& b) const
{
    CrystalElt cur = b;
    for (int k = 0; k < n; ++k) {
        auto next = etilde_star(i, cur);
        if (!next)
            throw DomainError("e_i^* power annihilates the element");
        cur = std::move(*next);
    }
    return cur;
}

CrystalElt CrystalEngine::ftilde_star_pow(int i, int n, const CrystalElt& b) const
{
    CrystalElt cur = b;
    for (int k = 0; k < n; ++k) {
        auto next = ftilde_star(i, cur);
        check(next.has_value(), "f_i^* annihilated an element of B(infinity)");
        cur = std::move(*next);
    }
    return cur;
}

std::pair<CrystalElt, BiElt> CrystalEngine::kashiwara_embed(int i, const CrystalElt& b) const
{
    int n = eps_star(i, b);
    return {etilde_star_pow(i, n, b), BiElt{i, -n}};
}

CrystalElt CrystalEngine::saito_lambda(int i, const CrystalElt& b) const
{
    if (eps_star(i, b) != 0)
        throw ValidationError("Saito's map needs eps_i^*(b) = 0");
    int p = phi(i, b);
    if (p < 0)
        throw DomainError("negative exponent phi_i(b) in Saito's map");
    return ftilde_star_pow(i, p, etilde_pow(i, eps(i, b), b));
}

CrystalElt CrystalEngine::saito_lambda_inv(int i, const CrystalElt& b) const
{
    if (eps(i, b) != 0)
        throw ValidationError("the inverse of Saito's map needs eps_i(b) = 0");
    int p = phi_star(i, b);
    if (p < 0)
        throw DomainError("negative exponent phi_i^*(b) in the inverse of Saito's map");
    return ftilde_pow(i, p, etilde_star_pow(i, eps_star(i, b), b));
}

CrystalElt CrystalEngine::inflate(int m, const CrystalElt& b) const
{
    if (m < 1)
        throw ValidationError("inflation order must be positive");
    std::vector<int> path;
    CrystalElt cur = b;
    while (!is_u_infinity(cur)) {
        bool moved = false;
        for (int i = 0; i < datum().rank() && !moved; ++i) {
            if (auto next = etilde(i, cur)) {
                cur = std::move(*next);
                path.push_back(i);
                moved = true;
            }
        }
        check(moved, "element other than u_infinity is annihilated by every e_i");
    }
    CrystalElt out = cur;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        out = ftilde_pow(*it, m, out);
    return out;
}

bool CrystalEngine::demazure_member(const ReducedWord& v, const CrystalElt& b) const
{
    CrystalElt cur = b;
    for (int i : v.letters())
        cur = etilde_pow(i, eps(i, cur), cur);
    return is_u_infinity(cur);
}

std::vector<int> CrystalEngine::string_data(const ReducedWord& w, const CrystalElt& b) const
{
    std::vector<int> out;
    CrystalElt cur = b;
    for (int i : w.letters()) {
        int n = eps(i, cur);
        out.push_back(n);
        cur = etilde_pow(i, n, cur);
    }
    return out;
}

} // namespace qunip
