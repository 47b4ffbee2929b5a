#include <doctest.h>

#include <algorithm>

#include "fwps/enumerate.hpp"
#include "fwps/report_io.hpp"
#include "oracles.hpp"

using namespace fwps;

namespace {

std::vector<std::vector<Int>> tuples_of(const EnumerationReport& r) {
    std::vector<std::vector<Int>> out;
    for (const UfPartition& a : r.partitions) out.push_back(a.parts());
    return out;
}

} // namespace

TEST_CASE("small enumerations match known sets") {
    EnumerationReport r = enumerate_ufp(1, 3);
    CHECK(tuples_of(r) == std::vector<std::vector<Int>>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}});
    CHECK(r.count() == 3);

    r = enumerate_ufp(2, 3);
    CHECK(r.count() == 10);
    auto tuples = tuples_of(r);
    CHECK(std::find(tuples.begin(), tuples.end(), std::vector<Int>{3, 12, 12}) != tuples.end());
    CHECK(std::find(tuples.begin(), tuples.end(), std::vector<Int>{6, 6, 6}) != tuples.end());

    CHECK(enumerate_ufp(1, 4).count() == 14);
    CHECK(enumerate_ufp(1, 5).count() == 147);
    CHECK(enumerate_ufp(1, 2).count() == 1); // just (2,2)
}

TEST_CASE("pruned search agrees with the naive reference") {
    for (long iota = 1; iota <= 3; ++iota)
        for (int n = 2; n <= 4; ++n) {
            auto pruned = tuples_of(enumerate_ufp(iota, n));
            auto naive = oracle::naive_enumerate(iota, n);
            std::sort(naive.begin(), naive.end());
            CHECK(pruned == naive);
        }
    // literal nested loops as a second reference
    for (long iota = 1; iota <= 3; ++iota) {
        auto triple = oracle::triple_loop_enumerate(iota);
        std::sort(triple.begin(), triple.end());
        CHECK(tuples_of(enumerate_ufp(iota, 3)) == triple);
        auto quad = oracle::quad_loop_enumerate(iota);
        std::sort(quad.begin(), quad.end());
        CHECK(tuples_of(enumerate_ufp(iota, 4)) == quad);
    }
}

TEST_CASE("enumerated tuples are ascending and bounded") {
    for (long iota : {1L, 2L, 4L}) {
        EnumerationReport r = enumerate_ufp(iota, 4);
        for (const UfPartition& a : r.partitions) {
            CHECK(std::is_sorted(a.parts().begin(), a.parts().end()));
            CHECK(a[0] > iota);
            CHECK(a[0] <= 4 * iota);
        }
        // lexicographic output order
        CHECK(std::is_sorted(r.partitions.begin(), r.partitions.end()));
    }
}

TEST_CASE("partition counts grow with length") {
    // informational sanity check, not a theorem: WARN never fails the run
    for (long iota = 1; iota <= 3; ++iota) {
        std::size_t prev = 0;
        for (int n = 2; n <= 5; ++n) {
            std::size_t count = enumerate_ufp(iota, n).count();
            WARN_GE(count, prev);
            prev = count;
        }
    }
}

TEST_CASE("serial and parallel kernels give byte-identical reports") {
    for (auto [iota, n] : std::vector<std::pair<long, int>>{{1, 5}, {2, 4}, {3, 4}, {5, 3}}) {
        EnumerationReport serial = enumerate_ufp_serial(iota, n);
        EnumerationReport parallel = enumerate_ufp_parallel(iota, n);
        CHECK(report_to_json(serial).dump(2) == report_to_json(parallel).dump(2));
        CHECK(report_to_csv(serial) == report_to_csv(parallel));
        CHECK(serial.nodes == parallel.nodes);
    }
}

TEST_CASE("budget is enforced") {
    EnumerationOptions opts;
    opts.budget = 10;
    opts.mode = EnumerationOptions::Mode::Serial;
    CHECK_THROWS_AS(enumerate_ufp(1, 5, opts), BudgetExceeded);
    opts.mode = EnumerationOptions::Mode::Parallel;
    CHECK_THROWS_AS(enumerate_ufp(1, 5, opts), BudgetExceeded);
    try {
        enumerate_ufp_serial(1, 5, opts);
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("frontier") != std::string::npos);
    }
}

TEST_CASE("sharpness verdicts") {
    SharpnessVerdict v = verify_sharpness(1, 4);
    CHECK(v.passed());
    CHECK(v.report.max_product == 72);
    CHECK(v.report.extremizers.size() == 2);
    CHECK(v.report.extremizers[0].parts() == std::vector<Int>{2, 3, 12, 12});
    CHECK(v.report.extremizers[1].parts() == std::vector<Int>{2, 6, 6, 6});

    v = verify_sharpness(2, 3);
    CHECK(v.passed());
    CHECK(v.report.max_product == 36);
    CHECK(v.report.extremizers[0].parts() == std::vector<Int>{3, 12, 12});
    CHECK(v.report.extremizers[1].parts() == std::vector<Int>{6, 6, 6});

    // the excluded case: maximum 9 exceeds the bound value 8
    v = verify_sharpness(1, 3);
    CHECK(v.is_exception);
    CHECK(v.passed());
    CHECK(v.report.max_product == 9);
    CHECK(v.report.bound_value == Rat(8));
    CHECK(v.report.bound_status == BoundStatus::Exceeds);

    v = verify_sharpness(3, 3);
    CHECK(v.passed());
    CHECK(v.report.max_product == 96);
    CHECK(v.report.extremizers.size() == 1);
    CHECK(v.report.extremizers[0].parts() == std::vector<Int>{4, 24, 24});

    CHECK_THROWS(verify_sharpness(1, 2));
}

TEST_CASE("region verdicts") {
    RegionVerdict v = verify_region(1, 4);
    CHECK(v.checked == 14);
    CHECK(v.all_pass());
    v = verify_region(2, 3);
    CHECK(v.checked == 10);
    CHECK(v.all_pass());
}

TEST_CASE("max degree over partitions") {
    MaxDegreeResult r = max_degree_over_partitions(1, 3);
    CHECK(r.max_degree == Rat(72));
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].parts() == std::vector<Int>{2, 3, 12, 12});
    CHECK(r.witnesses[1].parts() == std::vector<Int>{2, 6, 6, 6});
    REQUIRE(r.attainer_candidates.size() == 2);
    CHECK(r.attainer_candidates[0] == WeightSystem({6, 4, 1, 1}));
    CHECK(r.attainer_candidates[1] == WeightSystem({3, 1, 1, 1}));
    CHECK(r.non_reduced_witnesses.empty());

    r = max_degree_over_partitions(2, 2);
    CHECK(r.max_degree == Rat(9));
    REQUIRE(r.witnesses.size() == 2);
    REQUIRE(r.attainer_candidates.size() == 1);
    CHECK(r.attainer_candidates[0] == WeightSystem({4, 1, 1}));
    REQUIRE(r.non_reduced_witnesses.size() == 1);
    CHECK(r.non_reduced_witnesses[0].parts() == std::vector<Int>{6, 6, 6});

    r = max_degree_over_partitions(1, 2);
    CHECK(r.max_degree == Rat(9));
    REQUIRE(r.attainer_candidates.size() == 1);
    CHECK(r.attainer_candidates[0] == WeightSystem({1, 1, 1}));
}

TEST_CASE("argument validation") {
    CHECK_THROWS(enumerate_ufp(0, 3));
    CHECK_THROWS(enumerate_ufp(1, 1));
}
