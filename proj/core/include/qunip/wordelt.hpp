#pragma once

#include "qunip/rootdata.hpp"
#include "qunip/scalar.hpp"
#include "qunip/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace qunip {

// Finitely supported Q(q)-combination of words in the generators f_i, without zero coefficients.
class WordElt {
public:
    using Terms = std::map<Word, ScalarQ>;

    WordElt() = default;
    static WordElt one() { return word(Word()); }
    static WordElt word(const Word& w, const ScalarQ& c = ScalarQ(1));
    static WordElt generator(int i) { return word(Word::letter_word(i)); }
    // f_i^(n) as a single word with coefficient 1/[n]_i!.
    static WordElt divided_power(const RootDatum& datum, int i, int n);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    ScalarQ coeff(const Word& w) const;
    void add_term(const Word& w, const ScalarQ& c);

    // Content of every word when homogeneous; InternalError otherwise (or when zero).
    std::vector<int> content(int rank) const;
    bool is_homogeneous(int rank) const;
    // Homogeneous components keyed by content.
    std::map<std::vector<int>, WordElt> components(int rank) const;
    // wt as a root vector (negative coordinates).
    RootVec weight(int rank) const;

    WordElt operator-() const;
    WordElt& operator+=(const WordElt& o);
    WordElt& operator-=(const WordElt& o);
    WordElt& operator*=(const ScalarQ& c);
    friend WordElt operator+(WordElt a, const WordElt& b) { return a += b; }
    friend WordElt operator-(WordElt a, const WordElt& b) { return a -= b; }
    friend WordElt operator*(const ScalarQ& c, WordElt a) { return a *= c; }
    // Concatenation product.
    friend WordElt operator*(const WordElt& a, const WordElt& b);
    friend bool operator==(const WordElt& a, const WordElt& b) { return a.terms_ == b.terms_; }

    WordElt star() const;
    WordElt barinv() const;

    std::string to_string() const;

private:
    Terms terms_;
};

WordElt multiply(const WordElt& x, const WordElt& y);

// The derivations _ir and r_i, applied word by word.
WordElt ir(const RootDatum& datum, int i, const WordElt& x);
WordElt ri(const RootDatum& datum, int i, const WordElt& x);
// sigma = q^{N(wt x)} * star(bar x); x homogeneous.
WordElt sigma(const RootDatum& datum, const WordElt& x);

// Twisted coproduct r(x) as a list of (left, right) word pairs with coefficients.
struct TensorTerm {
    Word left, right;
    ScalarQ coeff;
};
std::vector<TensorTerm> rform(const RootDatum& datum, const WordElt& x);

// Primal evaluation of the Kashiwara form by peeling the first letter of x:
// (f_i x', y) = (x', _ir y).
ScalarQ kform(const RootDatum& datum, const WordElt& x, const WordElt& y);
// (x, y)_L = (x, y)_K / prod (1 - q_i^2)^{n_i}.
ScalarQ lform(const RootDatum& datum, const WordElt& x, const WordElt& y);
// prod (1 - q_i^2)^{n_i} for the given content.
ScalarQ kl_factor(const RootDatum& datum, const std::vector<int>& content);

// q-Serre element sum_k (-1)^k f_i^(k) f_j f_i^(1 - a_ij - k).
WordElt serre_element(const RootDatum& datum, int i, int j);

} // namespace qunip
