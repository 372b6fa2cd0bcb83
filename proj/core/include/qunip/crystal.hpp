#pragma once

#include "qunip/dualbasis.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qunip {

// Integer or -infinity (nullopt).
using ExtInt = std::optional<int>;

// What the tensor product rule needs to know about an element of an abstract crystal.
struct CrystalStats {
    RootVec wt;
    std::vector<ExtInt> eps;
    std::vector<ExtInt> phi;
};

enum class TensorSide { Left, Right };

// e_i^n (b1 (x) b2) = e_i^left b1 (x) e_i^right b2, and likewise for f_i.
struct TensorSplit {
    int left = 0;
    int right = 0;
    friend bool operator==(const TensorSplit&, const TensorSplit&) = default;
};

ExtInt tensor_eps(const RootDatum& datum, int i, const CrystalStats& b1, const CrystalStats& b2);
ExtInt tensor_phi(const RootDatum& datum, int i, const CrystalStats& b1, const CrystalStats& b2);
CrystalStats tensor_stats(const RootDatum& datum, const CrystalStats& b1, const CrystalStats& b2);
TensorSide tensor_etilde_side(int i, const CrystalStats& b1, const CrystalStats& b2);
TensorSide tensor_ftilde_side(int i, const CrystalStats& b1, const CrystalStats& b2);
// Closed forms of the iterated rule.
TensorSplit tensor_etilde_split(int i, int n, const CrystalStats& b1, const CrystalStats& b2);
TensorSplit tensor_ftilde_split(int i, int n, const CrystalStats& b1, const CrystalStats& b2);

// b_i(n) of the crystal B_i: wt = n alpha_i, eps_i = -n, phi_i = n.
struct BiElt {
    int i = 0;
    int n = 0;
    friend bool operator==(const BiElt&, const BiElt&) = default;
};
CrystalStats stats(const RootDatum& datum, const BiElt& b);

// b_e(c, w) for a reduced word w of the longest element.
struct CrystalElt {
    ReducedWord word;
    int e = 1;
    LusztigDatum c;

    friend bool operator==(const CrystalElt& a, const CrystalElt& b)
    {
        return a.word == b.word && a.e == b.e && a.c == b.c;
    }
};

// B(infinity) of a finite type datum. Operators are evaluated on representatives in
// L(infinity) through the algebra engine; results are read back modulo qL(infinity)
// through PBW coordinates.
class CrystalEngine {
public:
    // DomainError unless the datum is of finite type.
    explicit CrystalEngine(const DualCanonical& dc);

    const DualCanonical& dual_canonical() const { return dc_; }
    const RootDatum& datum() const { return alg_.datum(); }

    // b_e(c, w) for any reduced word, re-expressed on a reduced word of w_0 extending w.
    CrystalElt element(const ReducedWord& w, const LusztigDatum& c, int e) const;
    CrystalElt u_infinity(const ReducedWord& w, int e) const;
    bool is_u_infinity(const CrystalElt& b) const;

    // F_e(c, w), a representative in L(infinity).
    DualVec representative(const CrystalElt& b) const;
    // The class of x modulo qL(infinity); nullopt when x lies in qL(infinity).
    // InternalError when x is not in L(infinity) or its class is not a basis element.
    std::optional<CrystalElt> identify(const DualVec& x, const ReducedWord& w0, int e) const;
    // G^up(b).
    DualVec upper_global(const CrystalElt& b) const;

    RootVec wt(const CrystalElt& b) const;
    int eps(int i, const CrystalElt& b) const;
    int phi(int i, const CrystalElt& b) const;
    int eps_star(int i, const CrystalElt& b) const;
    int phi_star(int i, const CrystalElt& b) const;
    CrystalStats stats(const CrystalElt& b) const;

    std::optional<CrystalElt> etilde(int i, const CrystalElt& b) const;
    std::optional<CrystalElt> ftilde(int i, const CrystalElt& b) const;
    std::optional<CrystalElt> etilde_star(int i, const CrystalElt& b) const;
    std::optional<CrystalElt> ftilde_star(int i, const CrystalElt& b) const;
    CrystalElt star(const CrystalElt& b) const;
    // e_i^n b; DomainError when the result is zero.
    CrystalElt etilde_pow(int i, int n, const CrystalElt& b) const;
    CrystalElt ftilde_pow(int i, int n, const CrystalElt& b) const;
    CrystalElt etilde_star_pow(int i, int n, const CrystalElt& b) const;
    CrystalElt ftilde_star_pow(int i, int n, const CrystalElt& b) const;

    // Psi_i(b) = e_i^{*max} b (x) f_i^{eps_i^*(b)} b_i.
    std::pair<CrystalElt, BiElt> kashiwara_embed(int i, const CrystalElt& b) const;
    // Saito's bijection {eps_i^* = 0} -> {eps_i = 0}; ValidationError off its domain.
    CrystalElt saito_lambda(int i, const CrystalElt& b) const;
    CrystalElt saito_lambda_inv(int i, const CrystalElt& b) const;
    // S_m, through a path of f_i from u_infinity.
    CrystalElt inflate(int m, const CrystalElt& b) const;
    // e_{i_l}^max ... e_{i_1}^max b == u_infinity.
    bool demazure_member(const ReducedWord& v, const CrystalElt& b) const;
    std::vector<int> string_data(const ReducedWord& w, const CrystalElt& b) const;

private:
    const DualCanonical& dc_;
    const Algebra& alg_;
};

} // namespace qunip
