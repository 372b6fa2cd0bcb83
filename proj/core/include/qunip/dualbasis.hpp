#pragma once

#include "qunip/braid.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace qunip {

// Lusztig data are compared lexicographically: the first differing entry decides.
using LusztigDatum = std::vector<int>;
using Expansion = std::map<LusztigDatum, ScalarQ>;

// Coordinates of an element of U_q^-(w, e) on the PBW basis F_e(c, w).
class PBWVector {
public:
    PBWVector() = default;
    PBWVector(ReducedWord word, int e) : word_(std::move(word)), e_(e) {}

    const ReducedWord& word() const { return word_; }
    int sign() const { return e_; }
    const Expansion& coords() const { return coords_; }
    ScalarQ coordinate(const LusztigDatum& c) const;
    void set(const LusztigDatum& c, const ScalarQ& v);
    bool is_zero() const { return coords_.empty(); }

    friend bool operator==(const PBWVector& a, const PBWVector& b)
    {
        return a.word_ == b.word_ && a.e_ == b.e_ && a.coords_ == b.coords_;
    }

private:
    ReducedWord word_;
    int e_ = 1;
    Expansion coords_;
};

// A dual canonical basis element B^up(c, w) = G^up(b(c, w)).
struct DCBElement {
    LusztigDatum c;
    PBWVector pbw;    // coordinates on F_e(c', w)
    Expansion upper;  // coordinates on F^up_e(c', w); 1 at c
    Expansion phi;    // F^up(c) = B^up(c) + sum phi_{c,c'} B^up(c')
    DualVec dual;

    const ReducedWord& word() const { return pbw.word(); }
    int sign() const { return pbw.sign(); }
};

// Result of a divided restriction, expanded on the dual canonical basis of a reduced
// word of w_0 extending the input word.
struct RestrictionExpansion {
    ReducedWord word;
    int epsilon = 0; // epsilon_i(b)
    Expansion terms;
};

// c_w(c, c') = sum_{l<k} (c_k beta_k, c'_l beta_l) - 1/2 sum_k c_k c'_k (beta_k, beta_k).
// Always integral since (beta, beta)/2 is a symmetrizer.
int cform(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c, const LusztigDatum& cp);
// N_w(c, c') = c_w(c, c') - c_w(c', c).
int nform_pair(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c, const LusztigDatum& cp);
// k with B^up(c) B^up(c') = q^k B^up(c + c') + lower terms, under the sign conventions of
// the word model: -c_w(c, c') - sum_k c_k c'_k (beta_k, beta_k).
int leading_exponent(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c, const LusztigDatum& cp);
// Sum of c_k beta_k.
RootVec lusztig_weight(const ReducedWord& w, const LusztigDatum& c, int rank);
// All Lusztig data of the given weight, in increasing lex order.
std::vector<LusztigDatum> lusztig_data(const ReducedWord& w, const RootVec& wt);
// prod_k prod_{s=1}^{c_k} 1/(1 - q_{i_k}^{2s}): the L-norm of F(c, w).
ScalarQ pbw_lnorm(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c);

// Dual PBW and dual canonical bases of U_q^-(w, e). Weight spaces are built on first
// use and cached per (word, sign, weight); the dual canonical part only when asked for.
class DualCanonical {
public:
    explicit DualCanonical(const BraidEngine& braid) : braid_(braid), alg_(braid.algebra()) {}
    DualCanonical(const DualCanonical&) = delete;
    DualCanonical& operator=(const DualCanonical&) = delete;

    const BraidEngine& braid() const { return braid_; }
    const Algebra& algebra() const { return alg_; }

    // (F(c), F(c))_K computed in the word model.
    ScalarQ pbw_norm(const ReducedWord& w, const LusztigDatum& c, int e) const;
    // F^up_e(c, w) = F_e(c, w) / (F_e(c, w), F_e(c, w))_K.
    DualVec dual_pbw_dual(const ReducedWord& w, const LusztigDatum& c, int e) const;
    WordElt dual_pbw(const ReducedWord& w, const LusztigDatum& c, int e) const;

    // ValidationError when x is not in U_q^-(w, e).
    PBWVector pbw_coordinates(const DualVec& x, const ReducedWord& w, int e) const;
    PBWVector pbw_coordinates(const WordElt& x, const ReducedWord& w, int e) const;
    // Coordinates on the dual PBW basis, d_c'(x) = (x, F(c'))_K; no membership check.
    Expansion dual_pbw_coordinates(const DualVec& x, const ReducedWord& w, int e) const;

    // F(c_k beta_k) F(c_j beta_j) - q^{-(c_j beta_j, c_k beta_k)} F(c_j beta_j) F(c_k beta_k), j < k (1-based).
    PBWVector straighten(const ReducedWord& w, int j, int k, int cj, int ck, int e = 1) const;
    // Same with F^up in place of F, on the dual PBW basis.
    Expansion straighten_dual(const ReducedWord& w, int j, int k, int cj, int ck, int e = 1) const;

    DCBElement dual_canonical(const ReducedWord& w, const LusztigDatum& c, int e) const;
    // All dual canonical elements of one weight, in increasing lex order.
    std::vector<DCBElement> dual_canonical_weight(const ReducedWord& w, const RootVec& wt, int e) const;

    // x on the dual canonical basis; ValidationError when x is not in U_q^-(w, e).
    Expansion expand(const DualVec& x, const ReducedWord& w, int e) const;
    Expansion expand_product(const DCBElement& b1, const DCBElement& b2) const;
    // (c, k) when the expansion is q^k B^up(c).
    static std::optional<std::pair<LusztigDatum, int>> single_term(const Expansion& x);
    bool is_compatible(const DCBElement& b1, const DCBElement& b2) const;
    // k with x = q^k B^up(c), decided by the balanced characterization without building the
    // dual canonical basis of the weight; nullopt otherwise.
    std::optional<int> dcb_exponent(const DualVec& x, const ReducedWord& w, int e, const LusztigDatum& c) const;
    // Checks powers 2..m_max; a bounded check.
    bool is_real(const DCBElement& b, int m_max = 3) const;

    // _ir^(m) B^up(c); empty terms when m > epsilon_i(b). Finite type only.
    RestrictionExpansion ir_divided_on_dcb(int i, int m, const DCBElement& b) const;
    // (epsilon_{i_1}(b), epsilon_{i_2}(e_{i_1}^max b), ...) for x = G^up(b).
    std::vector<int> string_data(const ReducedWord& w, const DualVec& x) const;
    // Every term of B^up(b1) B^up(b2) whose string data on the word of b1 equals the sum of
    // those of b1 and b2 (lexicographic maximum). All of them are reported, not one.
    Expansion string_extremal_terms(const DCBElement& b1, const DCBElement& b2) const;

private:
    struct PBWData {
        std::vector<LusztigDatum> data;
        std::vector<DualVec> pbw;                 // F(c)
        std::vector<std::vector<ScalarQ>> pivot;  // F(c) on the pivots of the weight space
        std::vector<ScalarQ> norms;               // (F(c), F(c))_K
        std::vector<Word> pivots;
        std::size_t index(const LusztigDatum& c) const;
    };
    struct DCBData {
        std::shared_ptr<const PBWData> pbw;
        std::vector<std::vector<ScalarQ>> upper;  // B^up(c) on F^up, dense
        std::vector<Expansion> phi;
        std::vector<DualVec> dcb;
    };
    using Key = std::tuple<std::vector<int>, int, std::vector<int>>;

    std::shared_ptr<const PBWData> pbw_data(const ReducedWord& w, const RootVec& wt, int e) const;
    std::shared_ptr<const DCBData> dcb_data(const ReducedWord& w, const RootVec& wt, int e) const;
    std::shared_ptr<const PBWData> build_pbw(const ReducedWord& w, const RootVec& wt, int e) const;
    std::shared_ptr<const DCBData> build_dcb(std::shared_ptr<const PBWData> p, const RootVec& wt) const;
    static std::vector<ScalarQ> upper_coords(const PBWData& d, const DualVec& x);
    static std::vector<ScalarQ> peel(const DCBData& d, std::vector<ScalarQ> u, std::size_t below);
    // Throws ValidationError unless x = sum u_c F^up(c).
    static void check_member(const PBWData& d, const std::vector<ScalarQ>& u, const DualVec& x);
    DCBElement element(const ReducedWord& w, int e, const DCBData& d, std::size_t k) const;
    RootVec weight_of(const DualVec& x) const;

    const BraidEngine& braid_;
    const Algebra& alg_;
    mutable std::shared_mutex mutex_;
    mutable std::map<Key, std::shared_ptr<const PBWData>> pbw_cache_;
    mutable std::map<Key, std::shared_ptr<const DCBData>> dcb_cache_;
};

} // namespace qunip
