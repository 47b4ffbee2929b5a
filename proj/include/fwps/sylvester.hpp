#pragma once

#include "fwps/exact.hpp"
#include "fwps/uf_partition.hpp"
#include "fwps/weight_system.hpp"

namespace fwps {

/// Sylvester-type sequence for a given iota:
///   s_{iota,1} = iota+1,  s_{iota,k+1} = s_{iota,k}*(s_{iota,k}-1) + 1,
/// and t_{iota,k} = s_{iota,k} - 1 (equivalently iota*s_1*...*s_{k-1}).
/// Values are memoized per iota behind a lock; growth is doubly exponential.
Int sylvester_s(const Int& iota, int k);
Int sylvester_t(const Int& iota, int k);

/// Enlarged Sylvester partition of iota of length n >= 3:
/// (s_1, ..., s_{n-2}, 2*t_{n-1}, 2*t_{n-1}).
UfPartition syl_partition(const Int& iota, int n);

/// The extremal weight system of dimension d >= 2:
/// (2*t_d/s_1, ..., 2*t_d/s_{d-1}, 1, 1), which must agree with
/// q_of_a(syl_partition(iota, d+1)); both routes are computed and checked.
WeightSystem extremal_weights(const Int& iota, int d);

/// Sharp upper bound on the anticanonical degree in dimension d at
/// Gorenstein index iota: 2 for d = 1, 9 for (iota,d) = (1,2), and
/// 2*t_{iota,d}^2 / iota^{d+1} otherwise.
Rat degree_bound(const Int& iota, int d);

/// The weight systems attaining degree_bound exactly.
std::vector<WeightSystem> attainers(const Int& iota, int d);

enum class IneqStatus { Strict, Equality, Exception };

/// Compares (r+1)^r * t_{iota,n-r+1}^{r+1} against 2*t_{iota,n}^2 exactly.
/// Exception (left side larger) occurs only at (iota,n,r) = (1,2,2).
IneqStatus check_product_inequality(const Int& iota, int n, int r);

} // namespace fwps
