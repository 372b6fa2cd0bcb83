#pragma once

#include "qunip/laurent.hpp"
#include "qunip/scalar.hpp"
#include "qunip/word.hpp"

#include <memory>
#include <vector>

namespace qunip {

// The functional v -> (x, f_v)_K of a homogeneous x, stored densely over all words of
// its content as scale * entry(v) with integral Laurent entries.
//
// The product of U_q^- becomes a q-shuffle on these vectors, _ir and r_i become prefix
// and suffix restriction, and the dual bar involution becomes coefficient-wise bar.
class DualVec {
public:
    DualVec() = default;
    explicit DualVec(std::shared_ptr<const WordSpace> space);

    const WordSpace& space() const { return *space_; }
    const std::shared_ptr<const WordSpace>& space_ptr() const { return space_; }
    const std::vector<int>& content() const { return space_->content(); }
    std::size_t size() const { return vals_.size(); }

    const Laurent& entry(std::size_t k) const { return vals_[k]; }
    Laurent& entry(std::size_t k) { return vals_[k]; }
    const std::vector<Laurent>& entries() const { return vals_; }
    const ScalarQ& scale() const { return scale_; }
    void set_scale(const ScalarQ& s) { scale_ = s; }

    // (x, f_w)_K; zero for words of a different content.
    ScalarQ value(const Word& w) const;
    ScalarQ value(std::size_t k) const { return scale_ * vals_[k].to_scalar(); }
    bool is_zero() const;
    // Number of nonzero entries.
    std::size_t support() const;

    // Build from exact values; the scale becomes 1/(common denominator).
    static DualVec from_values(std::shared_ptr<const WordSpace> space, const std::vector<ScalarQ>& values);
    // Fold the scale into the entries when it is an integral Laurent monomial or polynomial.
    void absorb_scale();
    // Entries with scale folded in; InternalError if that leaves Z[q, q^-1].
    std::vector<Laurent> integral_entries() const;

    DualVec bar() const;
    DualVec operator-() const;
    DualVec& operator+=(const DualVec& o);
    DualVec& operator-=(const DualVec& o);
    friend DualVec operator+(DualVec a, const DualVec& b) { return a += b; }
    friend DualVec operator-(DualVec a, const DualVec& b) { return a -= b; }
    DualVec& operator*=(const ScalarQ& c);
    DualVec& mul_laurent(const Laurent& c);
    friend DualVec operator*(const ScalarQ& c, DualVec a) { return a *= c; }
    // Exact value comparison (scales may differ).
    friend bool operator==(const DualVec& a, const DualVec& b);
    friend bool operator!=(const DualVec& a, const DualVec& b) { return !(a == b); }
    // a == q^k b for some k; returns k via out parameter.
    static bool proportional_by_q_power(const DualVec& a, const DualVec& b, int& k);

private:
    std::shared_ptr<const WordSpace> space_;
    std::vector<Laurent> vals_;
    ScalarQ scale_{1};
};

} // namespace qunip
