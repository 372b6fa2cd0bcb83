#pragma once

#include "qunip/dualvec.hpp"
#include "qunip/rootdata.hpp"
#include "qunip/scalar.hpp"
#include "qunip/word.hpp"
#include "qunip/wordelt.hpp"

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

namespace qunip {

// Square matrix over Q(q), row-major.
using ScalarMatrix = std::vector<std::vector<ScalarQ>>;

// A basis of one weight space of U_q^- modulo the radical of the form.
struct WeightBasis {
    std::vector<int> content;
    std::vector<Word> pivots;
    // Phi(f_p) for each pivot p, over the whole word space.
    std::vector<DualVec> pivot_duals;
    ScalarMatrix gram;     // (f_p, f_p')_K
    ScalarMatrix gram_inv; // exact inverse
    std::size_t candidates = 0;

    std::size_t dimension() const { return pivots.size(); }
};

// The word model of U_q^- for one root datum: shared word spaces, cached weight bases
// and the q-shuffle calculus on dual vectors. Caches are safe for concurrent readers;
// a missing entry may be computed twice but is published once.
class Algebra {
public:
    explicit Algebra(RootDatum datum, int max_height = kMaxWordLength);
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const RootDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank(); }
    int max_height() const { return max_height_; }

    std::shared_ptr<const WordSpace> space(const std::vector<int>& content) const;
    DualVec zero(const std::vector<int>& content) const { return DualVec(space(content)); }
    // Phi(1).
    DualVec unit() const;

    // Phi of a homogeneous element; InternalError on inhomogeneous input.
    DualVec dual(const WordElt& x) const;
    DualVec dual(const WordElt& x, const std::vector<int>& content) const;
    // Product in U_q^-, computed as a q-shuffle.
    DualVec product(const DualVec& x, const DualVec& y) const;
    // Phi(f_i^(n) x).
    DualVec left_divided(int i, int n, const DualVec& x) const;
    DualVec right_divided(const DualVec& x, int i, int n) const;
    DualVec ir(int i, const DualVec& x) const;
    DualVec ri(int i, const DualVec& x) const;
    DualVec star(const DualVec& x) const;
    // The dual bar involution sigma.
    DualVec sigma(const DualVec& x) const { return x.bar(); }

    // (x, y)_K with x given by words and y by its dual vector.
    ScalarQ kform(const WordElt& x, const DualVec& y) const;
    ScalarQ kform(const WordElt& x, const WordElt& y) const;

    // Cached weight basis; BoundExceeded above max_height.
    std::shared_ptr<const WeightBasis> weight_basis(const std::vector<int>& content) const;
    // Coordinates of x on the pivots modulo the radical.
    std::vector<ScalarQ> normal_form(const WordElt& x, const std::vector<int>& content) const;
    std::vector<ScalarQ> normal_form(const DualVec& x) const;
    // The pivot combination representing x.
    WordElt reduce(const WordElt& x) const;
    WordElt to_words(const DualVec& x) const;

    // x = sum f_i^(n) x_n with _ir x_n = 0.
    std::vector<DualVec> kashiwara_decompose(int i, const DualVec& x) const;
    DualVec etilde(int i, const DualVec& x) const;
    DualVec ftilde(int i, const DualVec& x) const;
    // Star-conjugated operators.
    DualVec etilde_star(int i, const DualVec& x) const { return star(etilde(i, star(x))); }
    DualVec ftilde_star(int i, const DualVec& x) const { return star(ftilde(i, star(x))); }
    // Largest n with _ir^n x != 0.
    int ir_depth(int i, const DualVec& x) const;
    // (x, x)_K.
    ScalarQ self_form(const DualVec& x) const;
    // Max n with etilde_i^n x not in qL(inf). Defined only when x is congruent to a crystal
    // element mod qL(inf), i.e. (x, x)_K = 1 mod qA_0; ValidationError otherwise.
    int eps(int i, const DualVec& x) const;
    int eps_star(int i, const DualVec& x) const { return eps(i, star(x)); }

    std::vector<int> add_letter(std::vector<int> content, int i, int n = 1) const
    {
        content[static_cast<std::size_t>(i)] += n;
        return content;
    }

private:
    DualVec shuffle_fast(const DualVec& x, const DualVec& y, bool& ok) const;
    DualVec shuffle_slow(const DualVec& x, const DualVec& y) const;
    std::shared_ptr<const WeightBasis> build_basis(const std::vector<int>& content) const;
    std::shared_ptr<const RankTable> rank_table(const std::vector<int>& content) const;

    RootDatum datum_;
    int max_height_;
    std::vector<RootVec> roots_; // positive roots, finite type only
    mutable std::shared_mutex mutex_;
    mutable std::map<std::vector<int>, std::shared_ptr<const WordSpace>> spaces_;
    mutable std::map<std::vector<int>, std::shared_ptr<const WeightBasis>> bases_;
    mutable std::map<std::vector<int>, std::shared_ptr<const RankTable>> ranks_;
};

} // namespace qunip
