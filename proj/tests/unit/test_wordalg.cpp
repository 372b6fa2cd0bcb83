#include "doctest.h"

#include "qunip/algebra.hpp"
#include "qunip/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

using namespace qunip;

namespace {

Word w(std::vector<int> one_based)
{
    for (auto& a : one_based)
        --a;
    return Word(one_based);
}

WordElt gen(int i) { return WordElt::generator(i); }

// Random combination of words with the given content; coefficients are small q-monomials.
WordElt random_elt(std::mt19937& rng, const std::vector<int>& content, int terms)
{
    std::vector<int> letters;
    for (std::size_t a = 0; a < content.size(); ++a)
        letters.insert(letters.end(), static_cast<std::size_t>(content[a]), static_cast<int>(a));
    WordElt x;
    std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(letters.begin(), letters.end(), rng);
        int c = coef(rng);
        if (c == 0)
            c = 1;
        x.add_term(Word(letters), ScalarQ(c) * ScalarQ::q_pow(expo(rng)));
    }
    if (x.is_zero())
        x.add_term(Word(letters), ScalarQ(1));
    return x;
}

// Multisets of positive roots summing to xi.
long kostant(const std::vector<RootVec>& roots, std::vector<int> xi, std::size_t from = 0)
{
    if (std::all_of(xi.begin(), xi.end(), [](int c) { return c == 0; }))
        return 1;
    long n = 0;
    for (std::size_t k = from; k < roots.size(); ++k) {
        std::vector<int> rest = xi;
        bool ok = true;
        for (std::size_t a = 0; a < rest.size(); ++a) {
            rest[a] -= roots[k][a];
            ok = ok && rest[a] >= 0;
        }
        if (ok)
            n += kostant(roots, rest, k);
    }
    return n;
}

void for_each_content(int rank, int max_height, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    std::function<void(int, int)> rec = [&](int a, int left) {
        if (a == rank) {
            f(c);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[static_cast<std::size_t>(a)] = v;
            rec(a + 1, left - v);
        }
        c[static_cast<std::size_t>(a)] = 0;
    };
    rec(0, max_height);
}

} // namespace

TEST_CASE("concatenation product")
{
    auto d = RootDatum::preset("A2");
    CHECK(multiply(gen(0), gen(1)) == WordElt::word(w({1, 2})));
    std::mt19937 rng(1);
    auto x = random_elt(rng, {1, 1}, 3);
    CHECK(multiply(x, WordElt::one()) == x);
    CHECK(multiply(WordElt::divided_power(d, 0, 2), gen(0)) ==
          WordElt::word(w({1, 1, 1}), qfact(2, 1).inverse()));
}

TEST_CASE("derivations on words")
{
    auto d = RootDatum::preset("B2");
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        CHECK(ir(d, i, gen(i) * gen(j)) == gen(j));
        CHECK(ir(d, i, gen(j) * gen(i)) == ScalarQ::q_pow(-d.form_simple(j, i)) * gen(j));
        CHECK(ir(d, i, WordElt::one()).is_zero());
        CHECK(ri(d, i, gen(j) * gen(i)) == gen(j));
        CHECK(ri(d, i, gen(i) * gen(j)) == ScalarQ::q_pow(-d.form_simple(i, j)) * gen(j));
    }
    // Twisted Leibniz rule on random pairs.
    std::mt19937 rng(7);
    auto x = random_elt(rng, {1, 1}, 2), y = random_elt(rng, {2, 1}, 3);
    for (int i = 0; i < 2; ++i) {
        RootVec wx = x.weight(2);
        RootVec ai = d.simple(i);
        auto lhs = ir(d, i, x * y);
        auto rhs = ir(d, i, x) * y + ScalarQ::q_pow(d.form(wx, ai)) * (x * ir(d, i, y));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("twisted coproduct")
{
    auto d = RootDatum::preset("A2");
    auto r1 = rform(d, gen(0));
    CHECK(r1.size() == 2);
    auto r0 = rform(d, WordElt::one());
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].left.empty());
    CHECK(r0[0].right.empty());
    CHECK(r0[0].coeff.is_one());

    auto r = rform(d, gen(0) * gen(1));
    std::map<std::pair<Word, Word>, ScalarQ> got;
    for (const auto& t : r)
        got[{t.left, t.right}] += t.coeff;
    CHECK(got.size() == 4);
    CHECK(got[{w({1, 2}), Word()}].is_one());
    CHECK(got[{w({1}), w({2})}].is_one());
    CHECK(got[{w({2}), w({1})}] == ScalarQ::q_pow(-d.form_simple(0, 1)));
    CHECK(got[{Word(), w({1, 2})}].is_one());
}

TEST_CASE("Kashiwara and Lusztig forms")
{
    for (auto name : {"A2", "B2", "G2"}) {
        auto d = RootDatum::preset(name);
        CHECK(kform(d, WordElt::one(), WordElt::one()).is_one());
        for (int i = 0; i < d.rank(); ++i) {
            int di = d.d(i);
            CHECK(lform(d, gen(i), gen(i)) == (ScalarQ(1) - ScalarQ::q_pow(2 * di)).inverse());
            for (int n = 1; n <= 4; ++n) {
                auto fn = WordElt::divided_power(d, i, n);
                CHECK(kform(d, fn, fn) == ScalarQ::q_pow(-di * n * (n - 1) / 2) * qfact(n, di).inverse());
            }
        }
    }
}

TEST_CASE("form identities on random pairs")
{
    std::mt19937 rng(11);
    for (auto name : {"A2", "B2", "G2", "A3"}) {
        auto d = RootDatum::preset(name);
        Algebra alg(d);
        std::vector<int> c(static_cast<std::size_t>(d.rank()), 1);
        c[0] = 2;
        for (int trial = 0; trial < 3; ++trial) {
            auto x = random_elt(rng, c, 4), y = random_elt(rng, c, 4);
            ScalarQ xy = kform(d, x, y);
            CHECK(xy == kform(d, y, x));
            CHECK(xy == kform(d, x.star(), y.star()));
            // The dual-vector evaluation agrees with the primal recursion.
            CHECK(alg.kform(x, alg.dual(y)) == xy);
            for (int i = 0; i < d.rank(); ++i) {
                auto sub = alg.add_letter(c, i, -1);
                auto xs = random_elt(rng, sub, 3);
                CHECK(kform(d, gen(i) * xs, y) == kform(d, xs, ir(d, i, y)));
                CHECK(alg.ir(i, alg.dual(y)) == alg.dual(ir(d, i, y), sub));
                CHECK(alg.ri(i, alg.dual(y)) == alg.dual(ri(d, i, y), sub));
            }
            CHECK(alg.star(alg.dual(y)) == alg.dual(y.star()));
        }
    }
}

TEST_CASE("q-shuffle realizes the product")
{
    std::mt19937 rng(3);
    for (auto name : {"A2", "B2", "A3"}) {
        auto d = RootDatum::preset(name);
        Algebra alg(d);
        std::vector<int> cx(static_cast<std::size_t>(d.rank()), 0), cy = cx;
        cx[0] = 1;
        cx[1] = 1;
        cy[1] = 1;
        cy[static_cast<std::size_t>(d.rank() - 1)] += 1;
        auto x = random_elt(rng, cx, 2), y = random_elt(rng, cy, 2);
        auto cxy = cx;
        for (std::size_t a = 0; a < cxy.size(); ++a)
            cxy[a] += cy[a];
        CHECK(alg.product(alg.dual(x), alg.dual(y)) == alg.dual(x * y, cxy));
        auto z = random_elt(rng, cx, 2);
        CHECK(alg.product(alg.product(alg.dual(x), alg.dual(y)), alg.dual(z)) ==
              alg.product(alg.dual(x), alg.product(alg.dual(y), alg.dual(z))));
    }
}

TEST_CASE("involutions")
{
    std::mt19937 rng(5);
    for (auto name : {"A2", "B2", "G2"}) {
        auto d = RootDatum::preset(name);
        Algebra alg(d);
        for (int i = 0; i < d.rank(); ++i)
            CHECK(sigma(d, gen(i)) == gen(i));
        CHECK(WordElt::word(w({1, 2, 2})).star() == WordElt::word(w({2, 2, 1})));
        auto x = random_elt(rng, {2, 1}, 4), y = random_elt(rng, {1, 2}, 4);
        CHECK(sigma(d, sigma(d, x)) == x);
        RootVec wx = x.weight(2), wy = y.weight(2);
        CHECK(sigma(d, x * y) == ScalarQ::q_pow(d.form(wx, wy)) * (sigma(d, y) * sigma(d, x)));
        // On dual vectors sigma is the coefficient-wise bar.
        CHECK(alg.dual(sigma(d, x)) == alg.dual(x).bar());
        CHECK(alg.sigma(alg.sigma(alg.dual(y))) == alg.dual(y));
    }
}

TEST_CASE("weight spaces")
{
    auto a2 = RootDatum::preset("A2");
    Algebra alg(a2);
    auto wb = alg.weight_basis({1, 1});
    CHECK(wb->dimension() == 2);
    CHECK(wb->pivots == std::vector<Word>{w({1, 2}), w({2, 1})});
    auto nf = alg.normal_form(gen(0), {1, 0});
    REQUIRE(nf.size() == 1);
    CHECK(nf[0].is_one());

    for (auto name : {"A2", "B2", "G2", "A3"}) {
        auto d = RootDatum::preset(name);
        Algebra al(d);
        for (int i = 0; i < d.rank(); ++i)
            for (int j = 0; j < d.rank(); ++j) {
                if (i == j)
                    continue;
                auto s = serre_element(d, i, j);
                auto c = s.content(d.rank());
                for (const auto& v : al.normal_form(s, c))
                    CHECK(v.is_zero());
                CHECK(al.dual(s).is_zero());
                CHECK(al.reduce(s).is_zero());
            }
    }
    Algebra small(a2, 4);
    CHECK_THROWS_AS(small.weight_basis({3, 2}), BoundExceeded);
}

TEST_CASE("Gram rank equals the Kostant partition count")
{
    for (auto name : {"A2", "B2", "A3"}) {
        auto d = RootDatum::preset(name);
        Algebra alg(d);
        auto roots = beta_sequence(d, extend_to_longest(d, {}));
        for_each_content(d.rank(), 6, [&](const std::vector<int>& c) {
            CHECK(static_cast<long>(alg.weight_basis(c)->dimension()) == kostant(roots, c));
        });
    }
}

TEST_CASE("normal forms represent the element")
{
    std::mt19937 rng(13);
    auto d = RootDatum::preset("B2");
    Algebra alg(d);
    auto x = random_elt(rng, {2, 2}, 6);
    auto r = alg.reduce(x);
    auto y = random_elt(rng, {2, 2}, 5);
    CHECK(kform(d, r, y) == kform(d, x, y));
    CHECK(alg.dual(r) == alg.dual(x));
    CHECK(alg.to_words(alg.dual(x)) == r);
}

TEST_CASE("Kashiwara decomposition")
{
    auto d = RootDatum::preset("A2");
    Algebra alg(d);
    auto parts = alg.kashiwara_decompose(0, alg.dual(gen(0)));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].is_zero());
    CHECK(parts[1] == alg.unit());

    auto only = alg.dual(gen(1) * gen(0) - ScalarQ::q_pow(-d.form_simple(0, 1)) * (gen(0) * gen(1)));
    CHECK(alg.ir_depth(0, only) == 0);
    auto p0 = alg.kashiwara_decompose(0, only);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == only);

    std::mt19937 rng(17);
    for (auto name : {"A2", "B2", "G2"}) {
        auto dd = RootDatum::preset(name);
        Algebra al(dd);
        std::vector<WordElt> xs{gen(0) * gen(1) * gen(0), random_elt(rng, {3, 2}, 5), random_elt(rng, {2, 2}, 4)};
        for (const auto& x : xs) {
            auto dx = al.dual(x);
            for (int i = 0; i < 2; ++i) {
                auto ps = al.kashiwara_decompose(i, dx);
                DualVec sum = al.zero(dx.content());
                for (std::size_t n = 0; n < ps.size(); ++n) {
                    if (ps[n].content()[static_cast<std::size_t>(i)] > 0)
                        CHECK(al.ir(i, ps[n]).is_zero());
                    sum += al.left_divided(i, static_cast<int>(n), ps[n]);
                }
                CHECK(sum == dx);
            }
        }
    }
}

TEST_CASE("modified root operators")
{
    for (auto name : {"A2", "B2", "G2"}) {
        auto d = RootDatum::preset(name);
        Algebra alg(d);
        for (int i = 0; i < 2; ++i) {
            CHECK(alg.ftilde(i, alg.unit()) == alg.dual(gen(i)));
            for (int n = 1; n <= 4; ++n) {
                auto fn = alg.dual(WordElt::divided_power(d, i, n));
                auto fm = n == 1 ? alg.unit() : alg.dual(WordElt::divided_power(d, i, n - 1));
                CHECK(alg.etilde(i, fn) == fm);
                CHECK(alg.ftilde(i, fm) == fn);
            }
            // etilde inverts ftilde on any element.
            std::mt19937 rng(23);
            auto x = alg.dual(random_elt(rng, {1, 2}, 3));
            CHECK(alg.etilde(i, alg.ftilde(i, x)) == x);
            CHECK(alg.etilde_star(i, alg.ftilde_star(i, x)) == x);
        }
    }
}
