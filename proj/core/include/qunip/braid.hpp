#pragma once

#include "qunip/algebra.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

namespace qunip {

// Key of a normal-ordered monomial f_F t_mu e_E of U_q(g).
struct TriKey {
    Word f;
    RootVec mu;
    Word e;

    friend auto operator<=>(const TriKey&, const TriKey&) = default;
    friend bool operator==(const TriKey&, const TriKey&) = default;
};

// Element of U_q(g) as a combination of normal-ordered monomials. Products and
// reductions live in BraidEngine since they need the root datum.
class TriElt {
public:
    using Terms = std::map<TriKey, ScalarQ>;

    TriElt() = default;
    static TriElt one(int rank) { return monomial(Word(), RootVec(static_cast<std::size_t>(rank)), Word()); }
    static TriElt f(int rank, int i) { return monomial(Word::letter_word(i), RootVec(static_cast<std::size_t>(rank)), Word()); }
    static TriElt e(int rank, int i) { return monomial(Word(), RootVec(static_cast<std::size_t>(rank)), Word::letter_word(i)); }
    static TriElt t(const RootVec& mu) { return monomial(Word(), mu, Word()); }
    static TriElt monomial(const Word& f, const RootVec& mu, const Word& e, const ScalarQ& c = ScalarQ(1));
    static TriElt from_lower(const WordElt& x, int rank);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add_term(const TriKey& k, const ScalarQ& c);

    // True when every term is f-only with trivial torus part.
    bool is_lower() const;
    WordElt lower_part() const;

    TriElt& operator+=(const TriElt& o);
    TriElt& operator-=(const TriElt& o);
    TriElt& operator*=(const ScalarQ& c);
    friend TriElt operator+(TriElt a, const TriElt& b) { return a += b; }
    friend TriElt operator-(TriElt a, const TriElt& b) { return a -= b; }
    friend TriElt operator*(const ScalarQ& c, TriElt a) { return a *= c; }
    friend bool operator==(const TriElt& a, const TriElt& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    Terms terms_;
};

// One factor of a raw product of generators.
struct Generator {
    enum class Kind { F, E, T } kind;
    int index = 0; // for F and E
    RootVec mu;    // for T
};

// Lusztig's automorphisms and root vectors on top of the word model.
// T_i^{+1} = T''_{i,1} and T_i^{-1} = T'_{i,-1}.
class BraidEngine {
public:
    explicit BraidEngine(const Algebra& alg) : alg_(alg) {}
    BraidEngine(const BraidEngine&) = delete;
    BraidEngine& operator=(const BraidEngine&) = delete;

    const Algebra& algebra() const { return alg_; }
    int rank() const { return alg_.rank(); }

    TriElt normal_order(const std::vector<Generator>& gens) const;
    // Normal-ordered product with both the f- and e-parts reduced to pivots.
    TriElt product(const TriElt& a, const TriElt& b) const;
    TriElt reduce(const TriElt& x) const;

    // T_i^e (e = +1 or -1).
    TriElt braid_T(int i, int e, const TriElt& x) const;
    // Same on U_q^-; InternalError when the image leaves U_q^-.
    WordElt braid_T(int i, int e, const WordElt& x) const;
    TriElt generator_image(int i, int e, const Generator& g) const;

    // F_e(c beta_k) for 1 <= k <= l.
    WordElt root_vector(const ReducedWord& w, int k, int e, int c = 1) const;
    DualVec root_vector_dual(const ReducedWord& w, int k, int e, int c = 1) const;
    // Ordered product of divided-power root vectors; reversed order for e = -1.
    WordElt pbw_monomial(const ReducedWord& w, const std::vector<int>& c, int e) const;
    DualVec pbw_dual(const ReducedWord& w, const std::vector<int>& c, int e) const;

private:
    struct Term {
        Word f;
        RootVec mu;
        Word e;
        ScalarQ c;
    };
    TriElt product_raw(const TriElt& a, const TriElt& b) const;
    // e_E f_F rewritten as a normal-ordered combination.
    std::shared_ptr<const std::vector<Term>> commute(const Word& e, const Word& f) const;
    std::vector<Term> commute_letter(int a, const Word& f) const;
    int form_content(const RootVec& mu, const Word& w) const;

    const Algebra& alg_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<Word, Word>, std::shared_ptr<const std::vector<Term>>> commute_;
    mutable std::map<std::tuple<std::vector<int>, int, int>, std::shared_ptr<const WordElt>> roots_;
};

} // namespace qunip
