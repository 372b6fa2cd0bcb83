#include "qunip/rootdata.hpp"

#include "qunip/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qunip {

int height(const RootVec& xi) { return std::accumulate(xi.c.begin(), xi.c.end(), 0); }

bool is_positive(const RootVec& xi)
{
    return !xi.is_zero() && std::all_of(xi.c.begin(), xi.c.end(), [](int x) { return x >= 0; });
}

namespace {

// Leading principal minors of the symmetrized matrix, by fraction-free elimination.
bool positive_definite(const std::vector<std::vector<int>>& a, const std::vector<int>& d)
{
    const std::size_t n = a.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = static_cast<long long>(d[i]) * a[i][j];
    long long prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return true;
}

} // namespace

RootDatum::RootDatum(std::vector<std::vector<int>> cartan, std::vector<int> symmetrizers,
                     std::vector<std::string> labels, std::string name)
    : name_(std::move(name)), a_(std::move(cartan)), d_(std::move(symmetrizers)), labels_(std::move(labels))
{
    const std::size_t n = a_.size();
    if (n == 0 || n > 8)
        throw ValidationError("root datum: rank must be between 1 and 8");
    if (d_.size() != n)
        throw ValidationError("root datum: symmetrizer count does not match the Cartan matrix");
    for (const auto& row : a_)
        if (row.size() != n)
            throw ValidationError("root datum: Cartan matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (d_[i] <= 0)
            throw ValidationError("root datum: symmetrizers must be positive");
        if (a_[i][i] != 2)
            throw ValidationError("root datum: diagonal entries must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (a_[i][j] > 0)
                throw ValidationError("root datum: off-diagonal entries must be <= 0");
            if ((a_[i][j] == 0) != (a_[j][i] == 0))
                throw ValidationError("root datum: a_ij = 0 must imply a_ji = 0");
            if (d_[i] * a_[i][j] != d_[j] * a_[j][i])
                throw ValidationError("root datum: d_i a_ij must equal d_j a_ji");
        }
    }
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i)
            labels_.push_back(std::to_string(i + 1));
    if (labels_.size() != n)
        throw ValidationError("root datum: label count does not match the rank");
    finite_ = positive_definite(a_, d_);
}

RootDatum RootDatum::preset(std::string_view name)
{
    if (name == "A1")
        return RootDatum({{2}}, {1}, {}, "A1");
    if (name == "A2")
        return RootDatum({{2, -1}, {-1, 2}}, {1, 1}, {}, "A2");
    if (name == "A3")
        return RootDatum({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, {}, "A3");
    if (name == "B2")
        return RootDatum({{2, -1}, {-2, 2}}, {2, 1}, {}, "B2");
    if (name == "G2")
        return RootDatum({{2, -1}, {-3, 2}}, {3, 1}, {}, "G2");
    if (name == "A1~")
        return RootDatum({{2, -2}, {-2, 2}}, {1, 1}, {}, "A1~");
    throw ValidationError("unknown root datum preset '" + std::string(name) + "'");
}

std::vector<std::string> RootDatum::preset_names() { return {"A1", "A2", "A3", "B2", "G2", "A1~"}; }

int RootDatum::form(const RootVec& x, const RootVec& y) const
{
    int s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < rank(); ++j)
            s += x[i] * y[j] * form_simple(i, j);
    }
    return s;
}

int RootDatum::form(const RootVec& x, const Weight& l) const
{
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        s += x[i] * d_[i] * l[i];
    return s;
}

int RootDatum::pair(int i, const RootVec& x) const
{
    int s = 0;
    for (int j = 0; j < rank(); ++j)
        s += a_[i][j] * x[j];
    return s;
}

RootVec RootDatum::simple(int i) const
{
    RootVec r(static_cast<std::size_t>(rank()));
    r[i] = 1;
    return r;
}

Weight RootDatum::fundamental(int i) const
{
    Weight w(static_cast<std::size_t>(rank()));
    w[i] = 1;
    return w;
}

Weight RootDatum::rho() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank()), 1)); }

Weight RootDatum::to_weight(const RootVec& x) const
{
    Weight w(static_cast<std::size_t>(rank()));
    for (int j = 0; j < rank(); ++j)
        w[j] = pair(j, x);
    return w;
}

RootVec RootDatum::reflect(int i, RootVec x) const
{
    x[i] -= pair(i, x);
    return x;
}

Weight RootDatum::reflect(int i, Weight l) const
{
    int li = l[i];
    for (int j = 0; j < rank(); ++j)
        l[j] -= li * a_[j][i];
    return l;
}

int RootDatum::nform(const RootVec& x) const
{
    int s = form(x, x);
    for (int i = 0; i < rank(); ++i)
        s += 2 * d_[i] * x[i];
    check(s % 2 == 0, "nform: odd value, datum is inconsistent");
    return s / 2;
}

std::string RootDatum::fingerprint() const
{
    std::string out = "cartan:";
    for (const auto& row : a_) {
        for (int x : row)
            out += std::to_string(x) + ",";
        out += ";";
    }
    out += "sym:";
    for (int x : d_)
        out += std::to_string(x) + ",";
    return out;
}

std::vector<RootVec> beta_sequence(const RootDatum& datum, const std::vector<int>& letters)
{
    std::vector<RootVec> out;
    out.reserve(letters.size());
    for (std::size_t k = 0; k < letters.size(); ++k) {
        RootVec b = datum.simple(letters[k]);
        for (std::size_t s = k; s-- > 0;)
            b = datum.reflect(letters[s], b);
        out.push_back(std::move(b));
    }
    return out;
}

bool is_reduced(const RootDatum& datum, const std::vector<int>& letters)
{
    for (int i : letters)
        if (i < 0 || i >= datum.rank())
            return false;
    auto betas = beta_sequence(datum, letters);
    return std::all_of(betas.begin(), betas.end(), [](const RootVec& b) { return is_positive(b); });
}

ReducedWord::ReducedWord(const RootDatum& datum, std::vector<int> letters) : letters_(std::move(letters))
{
    for (int i : letters_)
        if (i < 0 || i >= datum.rank())
            throw ValidationError("reduced word: letter out of range");
    betas_ = beta_sequence(datum, letters_);
    for (const auto& b : betas_)
        if (!is_positive(b))
            throw ValidationError("word is not reduced");
}

std::pair<std::size_t, std::size_t> ReducedWord::kops(std::size_t k) const
{
    if (k < 1 || k > letters_.size())
        throw ValidationError("kops: position out of range");
    const int letter = letters_[k - 1];
    std::size_t minus = 0, kmax = k;
    for (std::size_t s = 1; s < k; ++s)
        if (letters_[s - 1] == letter)
            minus = s;
    for (std::size_t s = k; s <= letters_.size(); ++s)
        if (letters_[s - 1] == letter)
            kmax = s;
    return {minus, kmax};
}

Weight act(const RootDatum& datum, const std::vector<int>& letters, Weight l)
{
    for (std::size_t s = letters.size(); s-- > 0;)
        l = datum.reflect(letters[s], l);
    return l;
}

namespace {

Weight generic_weight(const RootDatum& datum)
{
    Weight g(static_cast<std::size_t>(datum.rank()));
    for (int i = 0; i < datum.rank(); ++i)
        g[i] = 1000 + 37 * i;
    return g;
}

// w(alpha_i) is negative iff l(w s_i) < l(w).
bool descends_right(const RootDatum& datum, const std::vector<int>& w, int i)
{
    RootVec b = datum.simple(i);
    for (std::size_t s = w.size(); s-- > 0;)
        b = datum.reflect(w[s], b);
    return !is_positive(b);
}

void enumerate_words(const RootDatum& datum, const std::vector<int>& w,
                     std::map<Weight, std::vector<std::vector<int>>>& memo,
                     std::vector<std::vector<int>>& out)
{
    if (w.empty()) {
        out.push_back({});
        return;
    }
    Weight key = act(datum, w, generic_weight(datum));
    if (auto it = memo.find(key); it != memo.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        return;
    }
    std::vector<std::vector<int>> mine;
    for (int i = 0; i < datum.rank(); ++i) {
        if (!descends_right(datum, w, i))
            continue;
        std::vector<int> shorter = w;
        shorter.push_back(i); // w s_i
        // Reduce w s_i to a reduced word by dropping the cancelled letter.
        std::vector<int> reduced;
        for (std::size_t drop = 0; drop < w.size(); ++drop) {
            std::vector<int> cand;
            for (std::size_t s = 0; s < w.size(); ++s)
                if (s != drop)
                    cand.push_back(w[s]);
            if (same_weyl_element(datum, cand, shorter)) {
                reduced = std::move(cand);
                break;
            }
        }
        std::vector<std::vector<int>> sub;
        enumerate_words(datum, reduced, memo, sub);
        for (auto& v : sub) {
            v.push_back(i);
            mine.push_back(std::move(v));
        }
    }
    std::sort(mine.begin(), mine.end());
    memo.emplace(key, mine);
    out.insert(out.end(), mine.begin(), mine.end());
}

} // namespace

bool same_weyl_element(const RootDatum& datum, const std::vector<int>& a, const std::vector<int>& b)
{
    Weight g = generic_weight(datum);
    return act(datum, a, g) == act(datum, b, g);
}

std::vector<std::vector<int>> reduced_words_of(const RootDatum& datum, const std::vector<int>& letters)
{
    if (!is_reduced(datum, letters))
        throw ValidationError("reduced_words_of: word is not reduced");
    if (letters.size() > 24)
        throw BoundExceeded("reduced_words_of: word too long");
    std::map<Weight, std::vector<std::vector<int>>> memo;
    std::vector<std::vector<int>> out;
    enumerate_words(datum, letters, memo, out);
    return out;
}

std::vector<int> extend_to_longest(const RootDatum& datum, const std::vector<int>& prefix)
{
    if (!datum.is_finite_type())
        throw ValidationError("longest element exists only in finite type");
    if (!is_reduced(datum, prefix))
        throw ValidationError("extend_to_longest: prefix is not reduced");
    std::vector<int> w = prefix;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < datum.rank(); ++i) {
            if (!descends_right(datum, w, i)) {
                w.push_back(i);
                grew = true;
                break;
            }
        }
    }
    return w;
}

int number_of_positive_roots(const RootDatum& datum)
{
    if (!datum.is_finite_type())
        throw ValidationError("positive roots are infinite outside finite type");
    std::set<RootVec> roots;
    std::vector<RootVec> todo;
    for (int i = 0; i < datum.rank(); ++i) {
        roots.insert(datum.simple(i));
        todo.push_back(datum.simple(i));
    }
    while (!todo.empty()) {
        RootVec r = todo.back();
        todo.pop_back();
        for (int i = 0; i < datum.rank(); ++i) {
            RootVec s = datum.reflect(i, r);
            if (is_positive(s) && roots.insert(s).second)
                todo.push_back(s);
        }
    }
    return static_cast<int>(roots.size());
}

} // namespace qunip
