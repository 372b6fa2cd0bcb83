#include "qunip/minors.hpp"

#include "qunip/errors.hpp"

#include <algorithm>
#include <functional>

namespace qunip {

namespace {

int length(const ReducedWord& w)
{
    return static_cast<int>(w.size());
}

void add_to(LusztigDatum& a, const LusztigDatum& b, int m = 1)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] += m * b[k];
}

} // namespace

LusztigDatum minor_datum(const ReducedWord& w, int k)
{
    if (k < 0 || k > length(w))
        throw ValidationError("minor index out of range");
    LusztigDatum n(w.size(), 0);
    if (k == 0)
        return n;
    int i = w.letter(static_cast<std::size_t>(k - 1));
    for (int j = 1; j <= k; ++j)
        if (w.letter(static_cast<std::size_t>(j - 1)) == i)
            n[static_cast<std::size_t>(j - 1)] = 1;
    return n;
}

int last_occurrence(const ReducedWord& w, int i)
{
    int last = 0;
    for (int k = 1; k <= length(w); ++k)
        if (w.letter(static_cast<std::size_t>(k - 1)) == i)
            last = k;
    return last;
}

LusztigDatum minor_datum_for_weight(const RootDatum& datum, const ReducedWord& w, const Weight& lambda)
{
    const int rank = datum.rank();
    if (static_cast<int>(lambda.size()) != rank)
        throw ValidationError("weight has the wrong rank");
    LusztigDatum n(w.size(), 0);
    for (int i = 0; i < rank; ++i) {
        int li = lambda[static_cast<std::size_t>(i)];
        if (li < 0)
            throw ValidationError("weight must be dominant");
        add_to(n, minor_datum(w, last_occurrence(w, i)), li);
    }
    return n;
}

std::vector<int> frozen_indices(const ReducedWord& w)
{
    std::vector<int> out;
    for (int k = 1; k <= length(w); ++k)
        if (last_occurrence(w, w.letter(static_cast<std::size_t>(k - 1))) == k)
            out.push_back(k);
    return out;
}

IntervalFree interval_free_reduce(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c)
{
    if (c.size() != w.size())
        throw ValidationError("Lusztig datum has the wrong length");
    if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; }))
        throw ValidationError("Lusztig data must be non-negative");
    const int rank = datum.rank();
    IntervalFree out{c, Weight(static_cast<std::size_t>(rank))};
    for (int i = 0; i < rank; ++i) {
        int m = -1;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (w.letter(k) == i)
                m = m < 0 ? c[k] : std::min(m, c[k]);
        if (m < 0)
            continue; // i does not occur: w varpi_i = varpi_i
        out.lambda[static_cast<std::size_t>(i)] = m;
        add_to(out.reduced, minor_datum(w, last_occurrence(w, i)), -m);
    }
    return out;
}

DCBElement Minors::flag_minor(const ReducedWord& w, int k) const
{
    return dc_.dual_canonical(w, minor_datum(w, k), -1);
}

DCBElement Minors::minor_for_weight(const ReducedWord& w, const Weight& lambda) const
{
    return dc_.dual_canonical(w, minor_datum_for_weight(dc_.algebra().datum(), w, lambda), -1);
}

std::optional<int> Minors::power_of(const DualVec& x, const ReducedWord& w, const LusztigDatum& c) const
{
    return dc_.dcb_exponent(x, w, -1, c);
}

int Minors::qcommute_exponent(const ReducedWord& w, int j, int k) const
{
    const Algebra& alg = dc_.algebra();
    LusztigDatum nj = minor_datum(w, j), nk = minor_datum(w, k), sum = nj;
    add_to(sum, nk);
    DualVec dj = dc_.dual_canonical(w, nj, -1).dual, dk = dc_.dual_canonical(w, nk, -1).dual;
    auto a = power_of(alg.product(dj, dk), w, sum);
    auto b = power_of(alg.product(dk, dj), w, sum);
    check(a && b, "product of flag minors is not a multiple of a dual canonical element");
    int measured = *a - *b;
    check(measured == nform_pair(alg.datum(), w, nj, nk),
          "measured q-commutation exponent differs from N_w(n_j, n_k)");
    return measured;
}

std::vector<std::vector<int>> Minors::lambda_matrix(const ReducedWord& w) const
{
    const int l = length(w);
    std::vector<std::vector<int>> m(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
    for (int j = 1; j <= l; ++j)
        for (int k = j + 1; k <= l; ++k) {
            int n = qcommute_exponent(w, j, k);
            m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = n;
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = -n;
        }
    return m;
}

CompatibilityReport Minors::check_strong_compatibility(const ReducedWord& w, int degree_bound) const
{
    if (degree_bound < 0)
        throw ValidationError("degree bound must be non-negative");
    const Algebra& alg = dc_.algebra();
    const std::size_t l = w.size();
    std::vector<DualVec> delta;
    for (int k = 1; k <= length(w); ++k)
        delta.push_back(flag_minor(w, k).dual);

    CompatibilityReport report;
    std::vector<int> m(l, 0);
    // Depth-first over exponents; the running product is kept along the path.
    std::function<void(std::size_t, int, const DualVec&, const LusztigDatum&)> rec =
        [&](std::size_t k, int left, const DualVec& prod, const LusztigDatum& c) {
            if (k == l) {
                if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; }))
                    return;
                ++report.checked;
                if (!power_of(prod, w, c))
                    report.failures.push_back(m);
                return;
            }
            DualVec p = prod;
            LusztigDatum cc = c;
            LusztigDatum nk = minor_datum(w, static_cast<int>(k + 1));
            for (int e = 0; e <= left; ++e) {
                m[k] = e;
                rec(k + 1, left - e, p, cc);
                p = alg.product(p, delta[k]);
                add_to(cc, nk);
            }
            m[k] = 0;
        };
    rec(0, degree_bound, alg.unit(), LusztigDatum(l, 0));
    return report;
}

std::optional<int> Minors::factorization_exponent(const ReducedWord& w, const LusztigDatum& c) const
{
    auto r = interval_free_reduce(dc_.algebra().datum(), w, c);
    DualVec x = dc_.algebra().product(dc_.dual_canonical(w, r.reduced, -1).dual, minor_for_weight(w, r.lambda).dual);
    return power_of(x, w, c);
}

std::optional<int> Minors::extremal_exponent(const ReducedWord& w, const Weight& lambda, const Weight& mu) const
{
    DualVec x = dc_.algebra().product(minor_for_weight(w, lambda).dual, minor_for_weight(w, mu).dual);
    return power_of(x, w, minor_datum_for_weight(dc_.algebra().datum(), w, lambda + mu));
}

SeedRecord Minors::export_seed(const ReducedWord& w) const
{
    SeedRecord s;
    for (int k = 1; k <= length(w); ++k)
        s.minors.push_back(minor_datum(w, k));
    s.lambda_matrix = lambda_matrix(w);
    s.frozen = frozen_indices(w);
    return s;
}

} // namespace qunip
