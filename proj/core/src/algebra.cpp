#include "qunip/algebra.hpp"

#include "qunip/errors.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <mutex>
#include <numeric>

namespace qunip {

namespace {

constexpr std::size_t kMaxAccumulator = std::size_t{1} << 24;

struct Letters {
    std::array<std::uint8_t, kMaxWordLength> a{};
    int len = 0;
};

Letters decode(const Word& w)
{
    Letters l;
    l.len = w.len;
    for (int k = 0; k < w.len; ++k)
        l.a[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(w.letter(k));
    return l;
}

// Enumerates the interleavings of p (x side) and s (y side). The exponent collects
// -(alpha_a, alpha_b) for every y letter a placed before an x letter b.
struct Interleaver {
    const RankTable* rt;
    int rank;
    const Letters* p;
    const Letters* s;
    const int* ypre; // ypre[j * rank + a] = sum_{t < j} (alpha_{s_t}, alpha_a)

    template <class Leaf>
    void run(int i, int j, std::uint64_t code, std::uint64_t vrank, int e, Leaf& leaf) const
    {
        if (i == p->len && j == s->len) {
            leaf(vrank, e);
            return;
        }
        if (i < p->len) {
            int a = p->a[static_cast<std::size_t>(i)];
            run(i + 1, j, code - rt->stride(a), vrank + rt->offset_code(code, a), e - ypre[j * rank + a], leaf);
        }
        if (j < s->len) {
            int a = s->a[static_cast<std::size_t>(j)];
            run(i, j + 1, code - rt->stride(a), vrank + rt->offset_code(code, a), e, leaf);
        }
    }
};

struct Nonzero {
    Letters word;
    const Laurent* val;
};

std::vector<Nonzero> nonzeros(const DualVec& x)
{
    std::vector<Nonzero> out;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x.entry(k).is_zero())
            out.push_back({decode(x.space().word(k)), &x.entry(k)});
    return out;
}

std::vector<int> prefix_forms(const RootDatum& d, const Letters& s)
{
    const int r = d.rank();
    std::vector<int> t(static_cast<std::size_t>((s.len + 1) * r), 0);
    for (int j = 0; j < s.len; ++j)
        for (int a = 0; a < r; ++a)
            t[static_cast<std::size_t>((j + 1) * r + a)] = t[static_cast<std::size_t>(j * r + a)] + d.form_simple(s.a[static_cast<std::size_t>(j)], a);
    return t;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t eval_mod(const Laurent& x, std::uint64_t q0)
{
    if (x.is_zero())
        return 0;
    std::uint64_t acc = 0;
    const Poly& p = x.poly();
    for (int k = p.degree(); k >= 0; --k) {
        mpz_class c = p.coeff(k);
        mpz_class m;
        mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), kPrime);
        acc = (acc * q0 + m.get_ui()) % kPrime;
    }
    std::uint64_t qk = x.low() >= 0 ? mod_pow(q0, static_cast<std::uint64_t>(x.low()), kPrime)
                                    : mod_pow(mod_pow(q0, kPrime - 2, kPrime), static_cast<std::uint64_t>(-x.low()), kPrime);
    return acc * qk % kPrime;
}

// Gauss-Jordan inverse over Q(q); InternalError when singular.
ScalarMatrix invert(ScalarMatrix a)
{
    const std::size_t n = a.size();
    ScalarMatrix inv(n, std::vector<ScalarQ>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = ScalarQ(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero())
            ++piv;
        check(piv < n, "singular Gram matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        ScalarQ f = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a[col][j].is_zero())
                a[col][j] *= f;
            if (!inv[col][j].is_zero())
                inv[col][j] *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero())
                continue;
            ScalarQ g = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[col][j].is_zero())
                    a[r][j] -= g * a[col][j];
                if (!inv[col][j].is_zero())
                    inv[r][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

// Multisets of roots (from index `from` on) summing to xi.
std::size_t partitions(const std::vector<RootVec>& roots, std::vector<int>& xi, std::size_t from)
{
    if (std::all_of(xi.begin(), xi.end(), [](int c) { return c == 0; }))
        return 1;
    std::size_t n = 0;
    for (std::size_t k = from; k < roots.size(); ++k) {
        bool fits = true;
        for (std::size_t a = 0; a < xi.size(); ++a)
            fits = fits && roots[k][a] <= xi[a];
        if (!fits)
            continue;
        for (std::size_t a = 0; a < xi.size(); ++a)
            xi[a] -= roots[k][a];
        n += partitions(roots, xi, k);
        for (std::size_t a = 0; a < xi.size(); ++a)
            xi[a] += roots[k][a];
    }
    return n;
}

} // namespace

Algebra::Algebra(RootDatum datum, int max_height) : datum_(std::move(datum)), max_height_(max_height)
{
    if (max_height_ < 0 || max_height_ > kMaxWordLength)
        throw ValidationError("height bound must lie between 0 and " + std::to_string(kMaxWordLength));
    if (datum_.is_finite_type())
        roots_ = beta_sequence(datum_, extend_to_longest(datum_, {}));
}

std::shared_ptr<const WordSpace> Algebra::space(const std::vector<int>& content) const
{
    check(static_cast<int>(content.size()) == rank(), "content has the wrong rank");
    {
        std::shared_lock lock(mutex_);
        if (auto it = spaces_.find(content); it != spaces_.end())
            return it->second;
    }
    auto sp = std::make_shared<const WordSpace>(content);
    std::unique_lock lock(mutex_);
    return spaces_.try_emplace(content, std::move(sp)).first->second;
}

std::shared_ptr<const RankTable> Algebra::rank_table(const std::vector<int>& content) const
{
    {
        std::shared_lock lock(mutex_);
        if (auto it = ranks_.find(content); it != ranks_.end())
            return it->second;
    }
    auto rt = std::make_shared<const RankTable>(content);
    std::unique_lock lock(mutex_);
    return ranks_.try_emplace(content, std::move(rt)).first->second;
}

DualVec Algebra::unit() const
{
    DualVec r = zero(std::vector<int>(static_cast<std::size_t>(rank()), 0));
    r.entry(0) = Laurent(1);
    return r;
}

DualVec Algebra::product(const DualVec& x, const DualVec& y) const
{
    bool ok = true;
    DualVec r = shuffle_fast(x, y, ok);
    if (!ok)
        r = shuffle_slow(x, y);
    r.set_scale(x.scale() * y.scale());
    return r;
}

DualVec Algebra::shuffle_fast(const DualVec& x, const DualVec& y, bool& ok) const
{
    std::vector<int> cv(x.content());
    for (std::size_t a = 0; a < cv.size(); ++a)
        cv[a] += y.content()[a];
    DualVec out(space(cv));
    auto xs = nonzeros(x);
    auto ys = nonzeros(y);
    if (xs.empty() || ys.empty())
        return out;

    int xlo = INT_MAX, xhi = INT_MIN, ylo = INT_MAX, yhi = INT_MIN;
    for (const auto& e : xs) {
        if (!e.val->is_small()) {
            ok = false;
            return out;
        }
        xlo = std::min(xlo, e.val->low());
        xhi = std::max(xhi, e.val->high());
    }
    for (const auto& e : ys) {
        if (!e.val->is_small()) {
            ok = false;
            return out;
        }
        ylo = std::min(ylo, e.val->low());
        yhi = std::max(yhi, e.val->high());
    }
    int emin = 0, emax = 0;
    for (int a = 0; a < rank(); ++a)
        for (int b = 0; b < rank(); ++b) {
            int f = datum_.form_simple(b, a) * x.content()[a] * y.content()[b];
            if (f > 0)
                emin -= f;
            else
                emax -= f;
        }
    const int base = xlo + ylo + emin;
    const std::size_t width = static_cast<std::size_t>(xhi + yhi + emax - base + 1);
    if (width * out.size() > kMaxAccumulator) {
        ok = false;
        return out;
    }
    std::vector<std::int64_t> acc(width * out.size(), 0);
    auto rt = rank_table(cv);
    const std::uint64_t code0 = rt->encode(cv);
    bool overflow = false;

    std::vector<std::int64_t> prod;
    int plow = 0;
    auto leaf = [&](std::uint64_t vrank, int e) {
        std::int64_t* dst = acc.data() + vrank * width + static_cast<std::size_t>(plow + e - base);
        for (std::size_t t = 0; t < prod.size(); ++t)
            overflow |= __builtin_add_overflow(dst[t], prod[t], &dst[t]);
    };
    for (const auto& s : ys) {
        auto ypre = prefix_forms(datum_, s.word);
        for (const auto& p : xs) {
            Laurent pr = *p.val * *s.val;
            if (!pr.is_small()) {
                ok = false;
                return out;
            }
            prod = pr.poly().small_coeffs();
            plow = pr.low();
            Interleaver il{rt.get(), rank(), &p.word, &s.word, ypre.data()};
            il.run(0, 0, code0, 0, 0, leaf);
            if (overflow) {
                ok = false;
                return out;
            }
        }
    }
    for (std::size_t v = 0; v < out.size(); ++v) {
        const std::int64_t* row = acc.data() + v * width;
        std::size_t lo = 0, hi = width;
        while (lo < hi && row[lo] == 0)
            ++lo;
        while (hi > lo && row[hi - 1] == 0)
            --hi;
        if (lo == hi)
            continue;
        out.entry(v) = Laurent(Poly(std::vector<std::int64_t>(row + lo, row + hi)), base + static_cast<int>(lo));
    }
    return out;
}

DualVec Algebra::shuffle_slow(const DualVec& x, const DualVec& y) const
{
    std::vector<int> cv(x.content());
    for (std::size_t a = 0; a < cv.size(); ++a)
        cv[a] += y.content()[a];
    DualVec out(space(cv));
    auto xs = nonzeros(x);
    auto ys = nonzeros(y);
    auto rt = rank_table(cv);
    const std::uint64_t code0 = rt->encode(cv);
    Laurent prod;
    auto leaf = [&](std::uint64_t vrank, int e) { out.entry(vrank) += prod.shifted(e); };
    for (const auto& s : ys) {
        auto ypre = prefix_forms(datum_, s.word);
        for (const auto& p : xs) {
            prod = *p.val * *s.val;
            Interleaver il{rt.get(), rank(), &p.word, &s.word, ypre.data()};
            il.run(0, 0, code0, 0, 0, leaf);
        }
    }
    return out;
}

namespace {

// Phi of sum c_w f_w by splitting on the first letter: Phi(f_a x') is a shuffle with a.
DualVec dual_rec(const Algebra& alg, const std::vector<int>& content, const WordElt::Terms& terms)
{
    DualVec acc = alg.zero(content);
    std::map<int, WordElt::Terms> by_first;
    for (const auto& [w, c] : terms) {
        if (w.empty()) {
            DualVec u = alg.unit();
            u *= c;
            acc += u;
        } else {
            by_first[w.first()].emplace(w.drop_first(), c);
        }
    }
    for (const auto& [a, rest] : by_first) {
        auto sub = alg.add_letter(content, a, -1);
        acc += alg.left_divided(a, 1, dual_rec(alg, sub, rest));
    }
    return acc;
}

} // namespace

DualVec Algebra::dual(const WordElt& x) const
{
    check(!x.is_zero(), "dual of zero needs an explicit content");
    return dual(x, x.content(rank()));
}

DualVec Algebra::dual(const WordElt& x, const std::vector<int>& content) const
{
    for (const auto& [w, c] : x.terms())
        check(w.content(rank()) == content, "dual: element is not homogeneous of the given content");
    DualVec raw = dual_rec(*this, content, x.terms());
    if (raw.scale().is_one())
        return raw;
    std::vector<ScalarQ> vals(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k)
        if (!raw.entry(k).is_zero())
            vals[k] = raw.value(k);
    return DualVec::from_values(raw.space_ptr(), vals);
}

DualVec Algebra::left_divided(int i, int n, const DualVec& x) const
{
    if (n == 0)
        return x;
    std::vector<int> ci(static_cast<std::size_t>(rank()), 0);
    ci[static_cast<std::size_t>(i)] = n;
    DualVec letter(space(ci));
    // Phi(f_i^(n)) is supported on i^n with value q_i^{-n(n-1)/2}; build it from letters.
    if (n == 1) {
        letter.entry(0) = Laurent(1);
    } else {
        DualVec one(space(add_letter(std::vector<int>(static_cast<std::size_t>(rank()), 0), i)));
        one.entry(0) = Laurent(1);
        DualVec pw = one;
        for (int k = 1; k < n; ++k)
            pw = product(one, pw);
        Laurent fact = Laurent::from_scalar(qfact(n, datum_.d(i)));
        letter.entry(0) = pw.entry(0).div_exact(fact);
    }
    return product(letter, x);
}

DualVec Algebra::right_divided(const DualVec& x, int i, int n) const
{
    if (n == 0)
        return x;
    std::vector<int> ci(static_cast<std::size_t>(rank()), 0);
    ci[static_cast<std::size_t>(i)] = n;
    DualVec letter = left_divided(i, n, unit());
    return product(x, letter);
}

DualVec Algebra::ir(int i, const DualVec& x) const
{
    check(x.content()[static_cast<std::size_t>(i)] > 0, "ir: letter absent from the weight");
    DualVec r(space(add_letter(x.content(), i, -1)));
    for (std::size_t k = 0; k < r.size(); ++k) {
        std::size_t j = x.space().index(r.space().word(k).prepend(i));
        r.entry(k) = x.entry(j);
    }
    r.set_scale(x.scale());
    return r;
}

DualVec Algebra::ri(int i, const DualVec& x) const
{
    check(x.content()[static_cast<std::size_t>(i)] > 0, "ri: letter absent from the weight");
    DualVec r(space(add_letter(x.content(), i, -1)));
    for (std::size_t k = 0; k < r.size(); ++k) {
        std::size_t j = x.space().index(r.space().word(k).append(i));
        r.entry(k) = x.entry(j);
    }
    r.set_scale(x.scale());
    return r;
}

DualVec Algebra::star(const DualVec& x) const
{
    DualVec r(x.space_ptr());
    for (std::size_t k = 0; k < r.size(); ++k)
        r.entry(k) = x.entry(x.space().index(x.space().word(k).reversed()));
    r.set_scale(x.scale());
    return r;
}

ScalarQ Algebra::kform(const WordElt& x, const DualVec& y) const
{
    ScalarQ s;
    for (const auto& [w, c] : x.terms()) {
        std::size_t k = y.space().index(w);
        if (k != WordSpace::npos && !y.entry(k).is_zero())
            s += c * y.entry(k).to_scalar();
    }
    return s * y.scale();
}

ScalarQ Algebra::kform(const WordElt& x, const WordElt& y) const { return qunip::kform(datum_, x, y); }

std::shared_ptr<const WeightBasis> Algebra::weight_basis(const std::vector<int>& content) const
{
    check(static_cast<int>(content.size()) == rank(), "content has the wrong rank");
    {
        std::shared_lock lock(mutex_);
        if (auto it = bases_.find(content); it != bases_.end())
            return it->second;
    }
    int h = std::accumulate(content.begin(), content.end(), 0);
    if (h > max_height_)
        throw BoundExceeded("weight of height " + std::to_string(h) + " exceeds the height bound " +
                            std::to_string(max_height_));
    auto b = build_basis(content);
    std::unique_lock lock(mutex_);
    return bases_.try_emplace(content, std::move(b)).first->second;
}

std::shared_ptr<const WeightBasis> Algebra::build_basis(const std::vector<int>& content) const
{
    auto wb = std::make_shared<WeightBasis>();
    wb->content = content;
    if (std::all_of(content.begin(), content.end(), [](int c) { return c == 0; })) {
        wb->pivots.push_back(Word());
        wb->pivot_duals.push_back(unit());
        wb->gram = {{ScalarQ(1)}};
        wb->gram_inv = {{ScalarQ(1)}};
        wb->candidates = 1;
        return wb;
    }
    // Every word is congruent to a combination of a.p' with p' a pivot one letter lower.
    std::vector<std::pair<Word, DualVec>> cand;
    for (int a = 0; a < rank(); ++a) {
        if (content[static_cast<std::size_t>(a)] == 0)
            continue;
        auto sub = weight_basis(add_letter(content, a, -1));
        for (std::size_t k = 0; k < sub->pivots.size(); ++k)
            cand.emplace_back(sub->pivots[k].prepend(a), left_divided(a, 1, sub->pivot_duals[k]));
    }
    std::sort(cand.begin(), cand.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    const std::size_t nc = cand.size();
    wb->candidates = nc;
    std::vector<std::vector<Laurent>> g(nc, std::vector<Laurent>(nc));
    for (std::size_t r = 0; r < nc; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            g[r][c] = cand[r].second.entry(cand[r].second.space().index(cand[c].first));

    for (std::uint64_t q0 : {1234577ULL, 987654323ULL, 55555333ULL, 31337ULL}) {
        // Greedy independent rows at q = q0 modulo a prime.
        std::vector<std::vector<std::uint64_t>> echelon;
        std::vector<std::size_t> lead;
        std::vector<std::size_t> chosen, rejected;
        for (std::size_t r = 0; r < nc; ++r) {
            std::vector<std::uint64_t> row(nc);
            for (std::size_t c = 0; c < nc; ++c)
                row[c] = eval_mod(g[r][c], q0);
            for (std::size_t e = 0; e < echelon.size(); ++e) {
                std::uint64_t f = row[lead[e]];
                if (f == 0)
                    continue;
                for (std::size_t c = 0; c < nc; ++c)
                    row[c] = (row[c] + kPrime - f * echelon[e][c] % kPrime) % kPrime;
            }
            std::size_t l = 0;
            while (l < nc && row[l] == 0)
                ++l;
            if (l == nc) {
                rejected.push_back(r);
                continue;
            }
            std::uint64_t inv = mod_pow(row[l], kPrime - 2, kPrime);
            for (auto& v : row)
                v = v * inv % kPrime;
            echelon.push_back(std::move(row));
            lead.push_back(l);
            chosen.push_back(r);
        }
        const std::size_t d = chosen.size();
        // In finite type the dimension is the number of PBW monomials; reaching it at q0
        // already proves the rank, since a minor nonzero mod p is nonzero.
        bool known = false;
        if (!roots_.empty()) {
            std::vector<int> xi = content;
            known = partitions(roots_, xi, 0) == d;
        }
        ScalarMatrix gpp(d, std::vector<ScalarQ>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                gpp[i][j] = g[chosen[i]][chosen[j]].to_scalar();
        ScalarMatrix inv = invert(gpp);
        // Exact certificate that the rank is not larger: the Schur complement vanishes.
        bool certified = true;
        for (std::size_t rr : known ? std::vector<std::size_t>{} : rejected) {
            std::vector<ScalarQ> y(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (!inv[i][j].is_zero() && !g[chosen[j]][rr].is_zero())
                        y[i] += inv[i][j] * g[chosen[j]][rr].to_scalar();
            for (std::size_t rc : rejected) {
                ScalarQ s = g[rc][rr].to_scalar();
                for (std::size_t i = 0; i < d; ++i)
                    if (!g[rc][chosen[i]].is_zero() && !y[i].is_zero())
                        s -= g[rc][chosen[i]].to_scalar() * y[i];
                if (!s.is_zero()) {
                    certified = false;
                    break;
                }
            }
            if (!certified)
                break;
        }
        if (!certified)
            continue;
        for (std::size_t i : chosen) {
            wb->pivots.push_back(cand[i].first);
            wb->pivot_duals.push_back(cand[i].second);
        }
        wb->gram = std::move(gpp);
        wb->gram_inv = std::move(inv);
        return wb;
    }
    throw InternalError("weight basis: rank certification failed");
}

std::vector<ScalarQ> Algebra::normal_form(const WordElt& x, const std::vector<int>& content) const
{
    auto wb = weight_basis(content);
    const std::size_t d = wb->dimension();
    std::vector<ScalarQ> b(d), out(d);
    for (std::size_t j = 0; j < d; ++j)
        b[j] = kform(x, wb->pivot_duals[j]);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!b[j].is_zero() && !wb->gram_inv[i][j].is_zero())
                out[i] += wb->gram_inv[i][j] * b[j];
    return out;
}

std::vector<ScalarQ> Algebra::normal_form(const DualVec& x) const
{
    auto wb = weight_basis(x.content());
    const std::size_t d = wb->dimension();
    std::vector<ScalarQ> b(d), out(d);
    for (std::size_t j = 0; j < d; ++j)
        b[j] = x.value(wb->pivots[j]);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!b[j].is_zero() && !wb->gram_inv[i][j].is_zero())
                out[i] += wb->gram_inv[i][j] * b[j];
    return out;
}

WordElt Algebra::reduce(const WordElt& x) const
{
    WordElt out;
    for (const auto& [content, part] : x.components(rank())) {
        auto coords = normal_form(part, content);
        auto wb = weight_basis(content);
        for (std::size_t j = 0; j < coords.size(); ++j)
            out.add_term(wb->pivots[j], coords[j]);
    }
    return out;
}

WordElt Algebra::to_words(const DualVec& x) const
{
    WordElt out;
    if (!x.space_ptr())
        return out;
    auto coords = normal_form(x);
    auto wb = weight_basis(x.content());
    for (std::size_t j = 0; j < coords.size(); ++j)
        out.add_term(wb->pivots[j], coords[j]);
    return out;
}

int Algebra::ir_depth(int i, const DualVec& x) const
{
    int best = -1;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x.entry(k).is_zero())
            continue;
        Word w = x.space().word(k);
        int n = 0;
        while (n < w.len && w.letter(n) == i)
            ++n;
        best = std::max(best, n);
    }
    return best;
}

ScalarQ Algebra::self_form(const DualVec& x) const
{
    auto wb = weight_basis(x.content());
    auto a = normal_form(x);
    ScalarQ s;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!a[j].is_zero())
            s += a[j] * x.value(wb->pivots[j]);
    return s;
}

namespace {

// L(inf) is self-dual for (,)_K, so for y in L(inf): y = b mod qL(inf) iff (y, y)_K = 1 mod q.
bool is_crystal_rep(const ScalarQ& n) { return n.is_regular_at_0() && n.eval0() == 1; }

} // namespace

int Algebra::eps(int i, const DualVec& x) const
{
    if (!is_crystal_rep(self_form(x)))
        throw ValidationError("eps is defined only on elements congruent to a crystal element mod qL(inf)");
    int n = 0;
    DualVec y = x;
    while (y.content()[static_cast<std::size_t>(i)] > 0) {
        y = etilde(i, y);
        if (y.is_zero() || !is_crystal_rep(self_form(y)))
            break;
        ++n;
    }
    return n;
}

std::vector<DualVec> Algebra::kashiwara_decompose(int i, const DualVec& x) const
{
    std::vector<DualVec> parts;
    const int top = ir_depth(i, x);
    if (top < 0)
        return {x};
    for (int n = 0; n <= top; ++n)
        parts.push_back(zero(add_letter(x.content(), i, -n)));
    DualVec cur = x;
    int n = top;
    while (n >= 0) {
        DualVec r = cur;
        for (int t = 0; t < n; ++t)
            r = ir(i, r);
        r *= ScalarQ::q_pow(datum_.d(i) * n * (n - 1) / 2);
        cur -= left_divided(i, n, r);
        parts[static_cast<std::size_t>(n)] = std::move(r);
        n = ir_depth(i, cur);
        check(n < top + 1, "kashiwara_decompose: depth did not decrease");
    }
    return parts;
}

DualVec Algebra::etilde(int i, const DualVec& x) const
{
    auto parts = kashiwara_decompose(i, x);
    if (x.content()[static_cast<std::size_t>(i)] == 0)
        return DualVec();
    DualVec out = zero(add_letter(x.content(), i, -1));
    for (std::size_t n = 1; n < parts.size(); ++n)
        if (!parts[n].is_zero())
            out += left_divided(i, static_cast<int>(n) - 1, parts[n]);
    return out;
}

DualVec Algebra::ftilde(int i, const DualVec& x) const
{
    auto parts = kashiwara_decompose(i, x);
    DualVec out = zero(add_letter(x.content(), i, 1));
    for (std::size_t n = 0; n < parts.size(); ++n)
        if (!parts[n].is_zero())
            out += left_divided(i, static_cast<int>(n) + 1, parts[n]);
    return out;
}

} // namespace qunip
