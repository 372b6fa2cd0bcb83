#pragma once

#include "qunip/dualbasis.hpp"

#include <utility>
#include <vector>

namespace qunip {

// n_k: entry j is 1 when i_j = i_k and j <= k. Positions are 1-based; n_0 = 0.
LusztigDatum minor_datum(const ReducedWord& w, int k);
// Last occurrence of letter i in w, 1-based; 0 when i does not occur.
int last_occurrence(const ReducedWord& w, int i);
// n^lambda = sum_i lambda_i n_{k_max(i)}. ValidationError unless lambda is dominant.
LusztigDatum minor_datum_for_weight(const RootDatum& datum, const ReducedWord& w, const Weight& lambda);
// 1-based k with k = k_max(i_k).
std::vector<int> frozen_indices(const ReducedWord& w);

// c = phi_c + n^lambda(c) with c^(i) = min{c_k : i_k = i}.
struct IntervalFree {
    LusztigDatum reduced;
    Weight lambda;
};
IntervalFree interval_free_reduce(const RootDatum& datum, const ReducedWord& w, const LusztigDatum& c);

struct CompatibilityReport {
    std::size_t checked = 0;
    std::vector<std::vector<int>> failures; // monomials in the flag minors
    bool ok() const { return failures.empty(); }
};

struct SeedRecord {
    std::vector<LusztigDatum> minors;
    std::vector<std::vector<int>> lambda_matrix;
    std::vector<int> frozen;
    // No exchange matrix is computed; it is exported as null.
};

// Unipotent quantum minors of U_q^-(w) as dual canonical elements with e = -1.
class Minors {
public:
    explicit Minors(const DualCanonical& dc) : dc_(dc) {}

    const DualCanonical& dual_canonical() const { return dc_; }

    // Delta_{w,k} = B^up(n_k).
    DCBElement flag_minor(const ReducedWord& w, int k) const;
    // Delta_{w lambda} = B^up(n^lambda).
    DCBElement minor_for_weight(const ReducedWord& w, const Weight& lambda) const;

    // N with Delta_j Delta_k = q^N Delta_k Delta_j, measured on the products and checked
    // against N_w(n_j, n_k); InternalError if they disagree.
    int qcommute_exponent(const ReducedWord& w, int j, int k) const;
    std::vector<std::vector<int>> lambda_matrix(const ReducedWord& w) const;

    // Every ordered monomial Delta_1^{m_1} ... Delta_l^{m_l} of degree <= bound is a power of
    // q times B^up(sum m_k n_k).
    CompatibilityReport check_strong_compatibility(const ReducedWord& w, int degree_bound) const;
    // k with x = q^k B^up(c), or nullopt.
    std::optional<int> power_of(const DualVec& x, const ReducedWord& w, const LusztigDatum& c) const;
    // k with B^up(phi_c) Delta_{w lambda(c)} = q^k B^up(c), or nullopt.
    std::optional<int> factorization_exponent(const ReducedWord& w, const LusztigDatum& c) const;
    // k with Delta_{w lambda} Delta_{w mu} = q^k Delta_{w(lambda + mu)}, or nullopt.
    std::optional<int> extremal_exponent(const ReducedWord& w, const Weight& lambda, const Weight& mu) const;

    SeedRecord export_seed(const ReducedWord& w) const;

private:
    const DualCanonical& dc_;
};

} // namespace qunip
