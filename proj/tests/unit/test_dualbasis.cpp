#include "doctest.h"

#include "qunip/dualbasis.hpp"
#include "qunip/errors.hpp"

#include <functional>

using namespace qunip;

namespace {

// All data of length l with |c| <= total.
std::vector<LusztigDatum> data_up_to(std::size_t l, int total)
{
    std::vector<LusztigDatum> out;
    LusztigDatum c(l, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == l) {
            out.push_back(c);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[k] = v;
            rec(k + 1, left - v);
        }
        c[k] = 0;
    };
    rec(0, total);
    return out;
}

LusztigDatum add(const LusztigDatum& a, const LusztigDatum& b)
{
    LusztigDatum s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        s[k] = a[k] + b[k];
    return s;
}

bool in_qzq(const ScalarQ& x)
{
    return x.is_zero() || (x.is_integral_laurent() && x.min_exponent() >= 1);
}

// Value of an expansion entry, zero when absent.
ScalarQ at(const Expansion& x, const LusztigDatum& c)
{
    auto it = x.find(c);
    return it == x.end() ? ScalarQ() : it->second;
}

struct Context {
    RootDatum datum;
    Algebra alg;
    BraidEngine braid;
    DualCanonical dc;
    ReducedWord word;

    Context(const char* name, std::vector<int> letters, int height = 12)
        : datum(RootDatum::preset(name)), alg(datum, height), braid(alg), dc(braid), word(datum, std::move(letters))
    {
    }
};

} // namespace

TEST_CASE("Lusztig data and pairing forms")
{
    Context a2("A2", {0, 1, 0});
    CHECK(lusztig_data(a2.word, RootVec({1, 1})) == std::vector<LusztigDatum>{{0, 1, 0}, {1, 0, 1}});
    CHECK(lusztig_data(a2.word, RootVec({0, 0})) == std::vector<LusztigDatum>{{0, 0, 0}});
    CHECK(lusztig_data(a2.word, RootVec({2, 1})).size() == 2);

    const auto& d = a2.datum;
    const auto& w = a2.word;
    CHECK(cform(d, w, {1, 0, 0}, {0, 1, 0}) == 0);
    CHECK(cform(d, w, {0, 1, 0}, {1, 0, 0}) == 1);
    CHECK(nform_pair(d, w, {1, 0, 0}, {0, 1, 0}) == -1);
    for (const auto& c : data_up_to(3, 2)) {
        CHECK(cform(d, w, c, {0, 0, 0}) == 0);
        CHECK(nform_pair(d, w, c, c) == 0);
        for (const auto& cp : data_up_to(3, 2))
            CHECK(nform_pair(d, w, c, cp) == -nform_pair(d, w, cp, c));
    }
    CHECK_THROWS_AS(cform(d, w, {1, 0}, {0, 0, 0}), ValidationError);
}

TEST_CASE("PBW norms and the dual PBW basis")
{
    Context a2("A2", {0, 1, 0});
    for (const auto& c : data_up_to(3, 4)) {
        auto content = lusztig_weight(a2.word, c, 2).c;
        CHECK(a2.dc.pbw_norm(a2.word, c, 1) == kl_factor(a2.datum, content) * pbw_lnorm(a2.datum, a2.word, c));
        // The dual basis property against every monomial of the weight.
        DualVec up = a2.dc.dual_pbw_dual(a2.word, c, 1);
        for (const auto& cp : lusztig_data(a2.word, RootVec(content))) {
            ScalarQ v = a2.alg.kform(a2.braid.pbw_monomial(a2.word, cp, 1), up);
            CHECK(v == ScalarQ(c == cp ? 1 : 0));
        }
    }
    CHECK(a2.dc.dual_pbw(a2.word, {0, 0, 0}, 1) == WordElt::one());

    Context b2("B2", {0, 1, 0, 1});
    for (const auto& c : data_up_to(4, 2))
        for (int e : {1, -1}) {
            auto content = lusztig_weight(b2.word, c, 2).c;
            CHECK(b2.dc.pbw_norm(b2.word, c, e) == kl_factor(b2.datum, content) * pbw_lnorm(b2.datum, b2.word, c));
        }
}

TEST_CASE("products of dual root vectors")
{
    // F^up(n beta) F^up(m beta) = q_i^{-mn} F^up((m+n) beta) in the sign convention of the word model.
    Context b2("B2", {0, 1, 0, 1});
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 2; ++m) {
                LusztigDatum cn(4, 0), cm(4, 0), cs(4, 0);
                cn[k - 1] = n;
                cm[k - 1] = m;
                cs[k - 1] = n + m;
                DualVec x = b2.alg.product(b2.dc.dual_pbw_dual(b2.word, cn, 1), b2.dc.dual_pbw_dual(b2.word, cm, 1));
                int e = 0;
                REQUIRE(DualVec::proportional_by_q_power(x, b2.dc.dual_pbw_dual(b2.word, cs, 1), e));
                CHECK(e == -m * n * b2.datum.d(b2.word.letter(static_cast<std::size_t>(k - 1))));
            }
}

namespace {

// (y, f_{i_1}^(a_1) ... f_{i_r}^(a_r))_K for the maximal letter runs of v; the finer
// divided monomials give weaker conditions.
ScalarQ divided_pairing(const RootDatum& datum, const DualVec& y, const Word& v)
{
    ScalarQ den(1);
    for (int k = 0; k < v.len;) {
        int r = k;
        while (r < v.len && v.letter(r) == v.letter(k))
            ++r;
        den *= qfact(r - k, datum.d(v.letter(k)));
        k = r;
    }
    return y.value(v) / den;
}

} // namespace

TEST_CASE("PBW monomials lie in the A-form")
{
    for (auto [name, letters, total] : {std::tuple{"A2", std::vector<int>{0, 1, 0}, 4},
                                        std::tuple{"B2", std::vector<int>{0, 1, 0, 1}, 3}}) {
        Context ctx(name, letters);
        for (const auto& c : data_up_to(letters.size(), total))
            for (int e : {1, -1}) {
                // F^up(c) pairs integrally with every divided monomial.
                DualVec up = ctx.dc.dual_pbw_dual(ctx.word, c, e);
                for (std::size_t k = 0; k < up.size(); ++k)
                    CHECK(divided_pairing(ctx.datum, up, up.space().word(k)).is_integral_laurent());
                // F(c) pairs integrally with the dual canonical basis of its weight.
                DualVec f = ctx.braid.pbw_dual(ctx.word, c, e);
                auto a = ctx.alg.normal_form(f);
                auto wb = ctx.alg.weight_basis(f.content());
                for (const auto& cp : lusztig_data(ctx.word, lusztig_weight(ctx.word, c, ctx.datum.rank()))) {
                    DualVec b = ctx.dc.dual_canonical(ctx.word, cp, e).dual;
                    ScalarQ s;
                    for (std::size_t j = 0; j < a.size(); ++j)
                        s += a[j] * b.value(wb->pivots[j]);
                    CHECK(s.is_integral_laurent());
                }
            }
    }
}

TEST_CASE("sigma is triangular on the dual PBW basis")
{
    for (auto [name, letters, total] : {std::tuple{"A2", std::vector<int>{0, 1, 0}, 4},
                                        std::tuple{"B2", std::vector<int>{0, 1, 0, 1}, 3}}) {
        Context ctx(name, letters);
        for (const auto& c : data_up_to(letters.size(), total))
            for (int e : {1, -1}) {
                DualVec up = ctx.dc.dual_pbw_dual(ctx.word, c, e);
                auto coords = ctx.dc.dual_pbw_coordinates(ctx.alg.sigma(up), ctx.word, e);
                CHECK(at(coords, c) == ScalarQ(1));
                for (const auto& [cp, v] : coords) {
                    CHECK(cp <= c);
                    CHECK(v.is_integral_laurent());
                }
            }
    }
}

TEST_CASE("PBW coordinates")
{
    Context a2("A2", {0, 1, 0});
    for (const auto& c : data_up_to(3, 3)) {
        auto v = a2.dc.pbw_coordinates(a2.braid.pbw_monomial(a2.word, c, 1), a2.word, 1);
        CHECK(v.coords().size() == 1);
        CHECK(v.coordinate(c) == ScalarQ(1));
    }

    // x = f_1 f_2 + f_2 f_1, coordinates by a Gram solve with the primal form.
    WordElt x = WordElt::word(Word(std::vector<int>{0, 1})) + WordElt::word(Word(std::vector<int>{1, 0}));
    auto v = a2.dc.pbw_coordinates(x, a2.word, 1);
    CHECK(v.coords().size() == 2);
    WordElt rebuilt;
    for (const auto& [c, a] : v.coords()) {
        WordElt f = a2.braid.pbw_monomial(a2.word, c, 1);
        CHECK(a == kform(a2.datum, x, f) / kform(a2.datum, f, f));
        rebuilt += a * f;
    }
    for (const auto& y : std::vector<Word>{Word(std::vector<int>{0, 1}), Word(std::vector<int>{1, 0})})
        CHECK(kform(a2.datum, x - rebuilt, WordElt::word(y)).is_zero());

    Context a3("A3", {0, 1});
    WordElt outside = WordElt::word(Word(std::vector<int>{0, 2}));
    CHECK_THROWS_AS(a3.dc.pbw_coordinates(outside, a3.word, 1), ValidationError);
    CHECK(a3.dc.pbw_coordinates(WordElt(), a3.word, 1).is_zero());
}

TEST_CASE("straightening")
{
    Context a2("A2", {0, 1, 0});
    // F(beta_3) F(beta_1) - q^{-(beta_1, beta_3)} F(beta_1) F(beta_3) lies on F(beta_2).
    auto v = a2.dc.straighten(a2.word, 1, 3, 1, 1);
    REQUIRE(v.coords().size() == 1);
    CHECK(v.coords().begin()->first == LusztigDatum{0, 1, 0});
    WordElt f1 = WordElt::generator(0), f2 = WordElt::generator(1);
    WordElt lhs = f2 * f1 - ScalarQ::q_pow(1) * (f1 * f2);
    WordElt fb2 = a2.braid.pbw_monomial(a2.word, {0, 1, 0}, 1);
    CHECK(v.coordinate({0, 1, 0}) == kform(a2.datum, lhs, fb2) / kform(a2.datum, fb2, fb2));

    Context a3("A3", {0, 2, 1});
    CHECK(a3.dc.straighten(a3.word, 1, 2, 1, 1).is_zero());

    Context b2("B2", {0, 1, 0, 1});
    for (int j = 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k)
            for (int cj = 1; cj <= 2; ++cj)
                for (int ck = 1; ck <= 2; ++ck) {
                    if (cj + ck > 3)
                        continue;
                    auto s = b2.dc.straighten(b2.word, j, k, cj, ck);
                    for (const auto& [c, a] : s.coords()) {
                        CHECK(c[static_cast<std::size_t>(j - 1)] < cj);
                        CHECK(c[static_cast<std::size_t>(k - 1)] < ck);
                        for (int m = 1; m <= 4; ++m)
                            if (m < j || m > k)
                                CHECK(c[static_cast<std::size_t>(m - 1)] == 0);
                    }
                    for (const auto& [c, a] : b2.dc.straighten_dual(b2.word, j, k, cj, ck)) {
                        CHECK(a.is_integral_laurent());
                        CHECK(c[static_cast<std::size_t>(j - 1)] < cj);
                        CHECK(c[static_cast<std::size_t>(k - 1)] < ck);
                    }
                }
}

TEST_CASE("dual canonical basis")
{
    Context a2("A2", {0, 1, 0});
    CHECK(a2.dc.dual_canonical(a2.word, {0, 0, 0}, 1).dual == a2.alg.unit());
    for (const auto& c : data_up_to(3, 5))
        for (int e : {1, -1}) {
            auto b = a2.dc.dual_canonical(a2.word, c, e);
            CHECK(a2.alg.sigma(b.dual) == b.dual);
            CHECK(at(b.upper, c) == ScalarQ(1));
            for (const auto& [cp, v] : b.upper) {
                CHECK(cp <= c);
                REQUIRE(v.is_regular_at_0());
                CHECK(v.eval0() == (cp == c ? 1 : 0));
            }
            for (const auto& [cp, v] : b.phi) {
                CHECK(cp < c);
                CHECK(in_qzq(v));
            }
            CHECK(b.pbw.coordinate(c) == a2.dc.pbw_norm(a2.word, c, e).inverse());
            int nonzero = 0;
            for (int x : c)
                nonzero += x > 0;
            if (nonzero == 1)
                CHECK(b.dual == a2.dc.dual_pbw_dual(a2.word, c, e));
        }

    // Dual to the canonical basis: {f_1 f_2, f_2 f_1} and {f_1^(2) f_2, f_2 f_1^(2)} are canonical in A2.
    auto dp = [&](int i, int n) { return WordElt::divided_power(a2.datum, i, n); };
    const std::vector<std::pair<RootVec, std::vector<WordElt>>> lower = {
        {RootVec({1, 1}), {dp(0, 1) * dp(1, 1), dp(1, 1) * dp(0, 1)}},
        {RootVec({2, 1}), {dp(0, 2) * dp(1, 1), dp(1, 1) * dp(0, 2)}},
        {RootVec({1, 2}), {dp(1, 2) * dp(0, 1), dp(0, 1) * dp(1, 2)}},
    };
    for (const auto& [wt, glow] : lower) {
        auto ups = a2.dc.dual_canonical_weight(a2.word, wt, 1);
        REQUIRE(ups.size() == glow.size());
        std::vector<int> hits(glow.size(), 0);
        for (const auto& b : ups) {
            int ones = 0;
            for (std::size_t j = 0; j < glow.size(); ++j) {
                ScalarQ v = a2.alg.kform(glow[j], b.dual);
                CHECK((v.is_zero() || v == ScalarQ(1)));
                if (v == ScalarQ(1)) {
                    ++ones;
                    ++hits[j];
                }
            }
            CHECK(ones == 1);
        }
        for (int h : hits)
            CHECK(h == 1);
    }

    Context b2("B2", {0, 1, 0, 1});
    for (const auto& c : data_up_to(4, 3)) {
        auto b = b2.dc.dual_canonical(b2.word, c, 1);
        CHECK(b2.alg.sigma(b.dual) == b.dual);
        for (const auto& [cp, v] : b.phi)
            CHECK(in_qzq(v));
    }
}

TEST_CASE("product expansions")
{
    Context a2("A2", {0, 1, 0});
    const auto& d = a2.datum;
    auto one = a2.dc.dual_canonical(a2.word, {0, 0, 0}, 1);
    for (const auto& c : data_up_to(3, 2))
        for (const auto& cp : data_up_to(3, 2)) {
            auto b1 = a2.dc.dual_canonical(a2.word, c, 1);
            auto b2 = a2.dc.dual_canonical(a2.word, cp, 1);
            auto x = a2.dc.expand_product(b1, b2);
            auto s = add(c, cp);
            CHECK(at(x, s) == ScalarQ::q_pow(leading_exponent(d, a2.word, c, cp)));
            for (const auto& [b, v] : x)
                CHECK(b <= s);
            auto y = a2.dc.expand_product(b2, b1);
            int pw = d.form(lusztig_weight(a2.word, c, 2), lusztig_weight(a2.word, cp, 2));
            for (const auto& [b, v] : x)
                CHECK(v.bar() == ScalarQ::q_pow(pw) * at(y, b));
            if (a2.dc.is_compatible(b1, b2))
                CHECK(DualCanonical::single_term(x)->first == s);
        }
    for (const auto& c : data_up_to(3, 2)) {
        auto b = a2.dc.dual_canonical(a2.word, c, 1);
        auto x = a2.dc.expand_product(b, one);
        CHECK(x == Expansion{{c, ScalarQ(1)}});
        CHECK(a2.dc.is_compatible(b, one));
    }
    CHECK_FALSE(a2.dc.is_compatible(a2.dc.dual_canonical(a2.word, {1, 0, 0}, 1),
                                    a2.dc.dual_canonical(a2.word, {0, 0, 1}, 1)));
    for (int k = 0; k < 3; ++k) {
        LusztigDatum c(3, 0);
        c[static_cast<std::size_t>(k)] = 1;
        CHECK(a2.dc.is_real(a2.dc.dual_canonical(a2.word, c, 1), 4));
    }
    CHECK(a2.dc.is_real(a2.dc.dual_canonical(a2.word, {1, 1, 0}, 1)));
}

TEST_CASE("divided restrictions on the dual canonical basis")
{
    Context a2("A2", {0, 1, 0});
    for (const auto& c : data_up_to(3, 3))
        for (int i = 0; i < 2; ++i) {
            auto b = a2.dc.dual_canonical(a2.word, c, 1);
            auto r0 = a2.dc.ir_divided_on_dcb(i, 0, b);
            CHECK(r0.terms == Expansion{{c, ScalarQ(1)}});
            const int eps = r0.epsilon;
            for (int m = 0; m <= eps; ++m) {
                auto r = a2.dc.ir_divided_on_dcb(i, m, b);
                // One term with epsilon_i = eps - m carrying the q-binomial; all others strictly lower.
                int leading = 0;
                for (const auto& [cp, v] : r.terms) {
                    int e2 = a2.alg.ir_depth(i, a2.dc.dual_canonical(r.word, cp, 1).dual);
                    CHECK(e2 <= eps - m);
                    if (e2 == eps - m) {
                        ++leading;
                        CHECK(v == qbinom(eps, m, a2.datum.d(i)));
                    } else {
                        CHECK(v.bar() == v);
                    }
                }
                CHECK(leading == 1);
                if (m == eps)
                    CHECK(DualCanonical::single_term(r.terms).has_value());
            }
            CHECK(a2.dc.ir_divided_on_dcb(i, eps + 1, b).terms.empty());
        }
}

TEST_CASE("string bound for products")
{
    Context a2("A2", {0, 1, 0});
    for (const auto& c : data_up_to(3, 2))
        for (const auto& cp : data_up_to(3, 2)) {
            auto b1 = a2.dc.dual_canonical(a2.word, c, 1);
            auto b2 = a2.dc.dual_canonical(a2.word, cp, 1);
            auto bound = add(a2.dc.string_data(a2.word, b1.dual), a2.dc.string_data(a2.word, b2.dual));
            int attained = 0;
            for (const auto& [b, v] : a2.dc.expand_product(b1, b2)) {
                auto eps = a2.dc.string_data(a2.word, a2.dc.dual_canonical(a2.word, b, 1).dual);
                CHECK(eps <= bound);
                if (eps == bound) {
                    ++attained;
                    CHECK(v == ScalarQ::q_pow(v.shift()));
                }
            }
            CHECK(attained >= 1);
            auto extremal = a2.dc.string_extremal_terms(b1, b2);
            CHECK(static_cast<int>(extremal.size()) == attained);
            for (const auto& [b, v] : extremal)
                CHECK(v.is_monomial());
        }
}
