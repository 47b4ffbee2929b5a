#pragma once

#include <vector>

#include "fwps/exact.hpp"

namespace fwps {

/// Tuple (q_0,...,q_d) of positive integer weights, d >= 1. Order is
/// preserved: it is tied to vertex order on the geometry side.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<Int> weights);

    int size() const { return static_cast<int>(weights_.size()); } // d+1 entries
    int dim() const { return size() - 1; }
    const std::vector<Int>& weights() const { return weights_; }
    const Int& operator[](int i) const { return weights_[i]; }

    bool operator==(const WeightSystem& o) const { return weights_ == o.weights_; }

private:
    std::vector<Int> weights_;
};

Int total_weight(const WeightSystem& q);

/// gcd of the weights.
Int factor(const WeightSystem& q);
WeightSystem reduce(const WeightSystem& q);
bool is_reduced(const WeightSystem& q);

/// True iff dropping any single weight leaves a tuple with gcd 1.
bool is_well_formed(const WeightSystem& q);

/// Index of the weight system: the least k >= 1 with q_i | k*|Q| for all i,
/// computed in closed form as lcm_i(q_i / gcd(q_i, |Q|)).
Int index(const WeightSystem& q);

/// Exact anticanonical degree |Q_red|^d / (lambda_p * factor(q) * prod(Q_red)).
/// For a reduced well-formed q with lambda_p = 1 this is the degree of the
/// weighted projective space with those weights; a caller analyzing a simplex
/// with multiplicity lambda_p > 1 passes it explicitly.
Rat degree(const WeightSystem& q, const Int& lambda_p = 1);

bool equal_up_to_order(const WeightSystem& a, const WeightSystem& b);

std::string to_string(const WeightSystem& q); // "(6,4,1,1)"

} // namespace fwps
