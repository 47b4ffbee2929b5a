#pragma once

#include <vector>

#include "fwps/exact.hpp"
#include "fwps/weight_system.hpp"

namespace fwps {

/// Unit-fraction partition of 1/iota: positive integers (a_1,...,a_n) with
/// sum of reciprocals exactly 1/iota. Parts are stored ascending. The
/// defining identity is checked with exact rationals on construction;
/// single-part tuples are rejected (each 1/a_k must be a proper fraction
/// of 1/iota).
class UfPartition {
public:
    UfPartition(Int iota, std::vector<Int> parts);

    const Int& iota() const { return iota_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<Int>& parts() const { return parts_; }
    const Int& operator[](int i) const { return parts_[i]; }

    bool operator==(const UfPartition& o) const {
        return iota_ == o.iota_ && parts_ == o.parts_;
    }
    bool operator<(const UfPartition& o) const {
        return parts_ < o.parts_; // lexicographic; callers compare within one iota
    }

private:
    Int iota_;
    std::vector<Int> parts_;
};

/// t_A = lcm of the parts.
Int total_weight_t(const UfPartition& a);

/// lambda_A = gcd(iota, a_1, ..., a_n).
Int factor_lambda(const UfPartition& a);

/// A / lambda_A, a uf-partition of iota / lambda_A.
UfPartition reduce_ufp(const UfPartition& a);
bool is_reduced_ufp(const UfPartition& a);

/// True iff every part divides the lcm of the others.
bool is_well_formed_ufp(const UfPartition& a);

/// A(Q) = (iota_Q*|Q|/q_0, ..., iota_Q*|Q|/q_d): a reduced uf-partition of
/// iota_Q. `paired` keeps the entry-by-entry pairing with q; `partition` is
/// the canonical (sorted) form.
struct PairedUfPartition {
    std::vector<Int> paired;
    UfPartition partition;
};
PairedUfPartition a_of_q_paired(const WeightSystem& q);
UfPartition a_of_q(const WeightSystem& q);

/// Q(A) = (t_A/a_1, ..., t_A/a_n): a reduced weight system, in the order of
/// the stored (ascending) parts, so weights come out descending.
WeightSystem q_of_a(const UfPartition& a);

/// Same map on a raw (not necessarily sorted) part tuple, keeping its order.
/// Applied to the paired form of a_of_q_paired(q) it returns reduce(q)
/// entry for entry.
WeightSystem q_of_parts(const std::vector<Int>& parts);

/// det G(iota; a_1..a_n) where G has diagonal a_k - iota and off-diagonal
/// -iota, in closed form: a_1...a_n - iota * sum_i prod_{j != i} a_j.
/// Zero exactly when the reciprocals of the parts sum to 1/iota.
Int det_g_closed(const Int& iota, const std::vector<Int>& parts);

/// Same determinant via an explicit matrix and det_exact; property-test
/// oracle for det_g_closed.
Int det_g_matrix(const Int& iota, const std::vector<Int>& parts);

/// Exact check that the reciprocal tuple (1/a_1 >= ... >= 1/a_n) satisfies
/// the region conditions: it sums to 1/iota and, for every k < n,
/// prod_{j<=k} 1/a_j <= iota * sum_{j>k} 1/a_j. Returns the first violated
/// k (1-based) or 0 when all hold.
int region_condition_violation(const UfPartition& a);

std::string to_string(const UfPartition& a); // "(2,3,12,12)"

} // namespace fwps
