#pragma once

#include <cstdint>
#include <vector>

#include "fwps/exact.hpp"
#include "fwps/sylvester.hpp"
#include "fwps/uf_partition.hpp"
#include "fwps/weight_system.hpp"

namespace fwps {

enum class BoundStatus { Matches, Exceeds, Below };

/// Complete list of uf-partitions of 1/iota of a given length, in
/// lexicographic order, together with the extremal head product
/// max(a_1 * ... * a_{n-1}) and how it compares to 2*t_{iota,n-1}^2/iota.
struct EnumerationReport {
    Int iota;
    int n = 0;
    std::vector<UfPartition> partitions;
    Int max_product;
    std::vector<UfPartition> extremizers;
    Rat bound_value;
    BoundStatus bound_status = BoundStatus::Below;
    std::uint64_t nodes = 0; // search-tree nodes visited

    std::size_t count() const { return partitions.size(); }
};

struct EnumerationOptions {
    std::uint64_t budget = 100'000'000; // search-tree nodes, not wall time
    enum class Mode { Auto, Serial, Parallel } mode = Mode::Auto;
};

/// Thrown when the node budget runs out; carries the search frontier that
/// was being expanded.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t budget, const std::string& frontier);
};

/// Serial reference enumerator. Recursion on the remaining fraction p/q in
/// lowest terms with m slots left and lower bound lo; a candidate part
/// ranges over max(lo, floor(q/p)+1) ... floor(m*q/p). Exact integer
/// arithmetic throughout.
EnumerationReport enumerate_ufp_serial(const Int& iota, int n,
                                       const EnumerationOptions& opts = {});

/// OpenMP enumerator: first-level branches run concurrently and are merged
/// in branch order, so the report is byte-identical to the serial one.
EnumerationReport enumerate_ufp_parallel(const Int& iota, int n,
                                         const EnumerationOptions& opts = {});

/// Dispatches on opts.mode (Auto picks the parallel kernel when OpenMP is
/// available); results are identical either way.
EnumerationReport enumerate_ufp(const Int& iota, int n,
                                const EnumerationOptions& opts = {});

/// Outcome of checking the sharp product bound against an exhaustive
/// enumeration: the bound itself, and whether the extremizer set is exactly
/// the predicted one (the enlarged Sylvester partition, plus (6,6,6) at
/// (iota,n) = (2,3) and (2,6,6,6) at (1,4)). (1,3) is the documented
/// exception where the true maximum 9 exceeds 2*t^2/iota = 8.
struct SharpnessVerdict {
    EnumerationReport report;
    bool is_exception = false;
    std::vector<UfPartition> expected_extremizers;
    bool bound_ok = false;
    bool extremizers_match = false;

    bool passed() const { return bound_ok && extremizers_match; }
};
SharpnessVerdict verify_sharpness(const Int& iota, int n,
                                  const EnumerationOptions& opts = {});

/// Checks the region conditions in exact arithmetic for every enumerated
/// partition; failures list the partition and the violated condition index.
struct RegionVerdict {
    std::size_t checked = 0;
    std::vector<std::pair<UfPartition, int>> failures;

    bool all_pass() const { return failures.empty(); }
};
RegionVerdict verify_region(const Int& iota, int n,
                            const EnumerationOptions& opts = {});

/// Maximizes prod(a)/(iota^d * lcm(a)) over all uf-partitions of 1/iota of
/// length d+1. Reduced witnesses correspond to weighted projective spaces
/// via q_of_a; non-reduced witnesses are flagged instead of mapped.
struct MaxDegreeResult {
    Rat max_degree;
    std::vector<UfPartition> witnesses;
    std::vector<UfPartition> non_reduced_witnesses;
    std::vector<WeightSystem> attainer_candidates;
};
MaxDegreeResult max_degree_over_partitions(const Int& iota, int d,
                                           const EnumerationOptions& opts = {});

} // namespace fwps
