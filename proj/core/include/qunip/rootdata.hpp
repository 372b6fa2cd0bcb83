#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qunip {

// Integer vector in a fixed basis; the tag separates root-lattice and weight coordinates.
template <class Tag>
struct Lattice {
    std::vector<int> c;

    Lattice() = default;
    explicit Lattice(std::size_t n) : c(n, 0) {}
    explicit Lattice(std::vector<int> v) : c(std::move(v)) {}

    std::size_t size() const { return c.size(); }
    int operator[](std::size_t i) const { return c[i]; }
    int& operator[](std::size_t i) { return c[i]; }
    bool is_zero() const
    {
        for (int x : c)
            if (x != 0)
                return false;
        return true;
    }

    Lattice& operator+=(const Lattice& o)
    {
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += o.c[i];
        return *this;
    }
    Lattice& operator-=(const Lattice& o)
    {
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= o.c[i];
        return *this;
    }
    friend Lattice operator+(Lattice a, const Lattice& b) { return a += b; }
    friend Lattice operator-(Lattice a, const Lattice& b) { return a -= b; }
    friend Lattice operator*(int k, Lattice a)
    {
        for (int& x : a.c)
            x *= k;
        return a;
    }
    Lattice operator-() const { return -1 * *this; }
    friend auto operator<=>(const Lattice&, const Lattice&) = default;
};

struct RootTag {};
struct WeightTag {};
// Coordinates in the simple roots alpha_i.
using RootVec = Lattice<RootTag>;
// Coordinates in the fundamental weights varpi_i.
using Weight = Lattice<WeightTag>;

int height(const RootVec& xi);
bool is_positive(const RootVec& xi); // nonzero with all coordinates >= 0

// Symmetrizable generalized Cartan matrix with symmetrizers d_i = (alpha_i, alpha_i)/2.
class RootDatum {
public:
    RootDatum(std::vector<std::vector<int>> cartan, std::vector<int> symmetrizers,
              std::vector<std::string> labels = {}, std::string name = "custom");

    // "A1", "A2", "A3", "B2", "G2", "A1~"; ValidationError otherwise.
    static RootDatum preset(std::string_view name);
    static std::vector<std::string> preset_names();

    const std::string& name() const { return name_; }
    int rank() const { return static_cast<int>(a_.size()); }
    int cartan(int i, int j) const { return a_[i][j]; }
    int d(int i) const { return d_[i]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return a_; }
    const std::vector<int>& symmetrizers() const { return d_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_finite_type() const { return finite_; }

    // (alpha_i, alpha_j) = d_i a_ij
    int form_simple(int i, int j) const { return d_[i] * a_[i][j]; }
    int form(const RootVec& x, const RootVec& y) const;
    int form(const RootVec& x, const Weight& l) const;
    // <h_i, x>
    int pair(int i, const RootVec& x) const;
    int pair(int i, const Weight& l) const { return l[static_cast<std::size_t>(i)]; }

    RootVec simple(int i) const;
    Weight fundamental(int i) const;
    Weight rho() const;
    Weight to_weight(const RootVec& x) const;

    RootVec reflect(int i, RootVec x) const;
    Weight reflect(int i, Weight l) const;

    // N(xi) = ((xi,xi) + sum xi_i (alpha_i,alpha_i)) / 2
    int nform(const RootVec& x) const;

    // Stable textual identity, used in cache keys.
    std::string fingerprint() const;

private:
    std::string name_;
    std::vector<std::vector<int>> a_;
    std::vector<int> d_;
    std::vector<std::string> labels_;
    bool finite_ = false;
};

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}); letters are 0-based.
std::vector<RootVec> beta_sequence(const RootDatum& datum, const std::vector<int>& letters);
bool is_reduced(const RootDatum& datum, const std::vector<int>& letters);

// A validated reduced expression with cached roots beta_k.
class ReducedWord {
public:
    ReducedWord() = default;
    // ValidationError when a letter is out of range or the word is not reduced.
    ReducedWord(const RootDatum& datum, std::vector<int> letters);

    std::size_t size() const { return letters_.size(); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(std::size_t k) const { return letters_[k]; }
    // Roots in order, 0-based position k.
    const std::vector<RootVec>& betas() const { return betas_; }
    const RootVec& beta(std::size_t k) const { return betas_[k]; }

    // 1-based positions: returns (k^-, k_max) with k^- = 0 when no earlier occurrence exists.
    std::pair<std::size_t, std::size_t> kops(std::size_t k) const;

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) { return a.letters_ == b.letters_; }

private:
    std::vector<int> letters_;
    std::vector<RootVec> betas_;
};

// Weyl group elements are compared through their action on a generic dominant weight.
Weight act(const RootDatum& datum, const std::vector<int>& letters, Weight l);
bool same_weyl_element(const RootDatum& datum, const std::vector<int>& a, const std::vector<int>& b);
// All reduced words of the Weyl element represented by `letters` (finite type, small rank).
std::vector<std::vector<int>> reduced_words_of(const RootDatum& datum, const std::vector<int>& letters);
// A reduced word of the longest element extending `prefix` (finite type only).
std::vector<int> extend_to_longest(const RootDatum& datum, const std::vector<int>& prefix);
int number_of_positive_roots(const RootDatum& datum);

} // namespace qunip
