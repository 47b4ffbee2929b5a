#include <doctest.h>

#include "fwps/uf_partition.hpp"
#include "test_util.hpp"

using namespace fwps;

TEST_CASE("construction validates the defining identity") {
    CHECK_NOTHROW(UfPartition(1, {2, 3, 6}));
    CHECK_NOTHROW(UfPartition(2, {6, 6, 6}));
    CHECK_THROWS_WITH(UfPartition(1, {2, 3, 7}), "not a uf-partition of 1/iota");
    CHECK_THROWS(UfPartition(1, {3})); // single parts are rejected
    CHECK_THROWS(UfPartition(0, {2, 2}));
    CHECK_THROWS(UfPartition(1, {2, 0}));
}

TEST_CASE("parts are stored ascending") {
    UfPartition a(1, {6, 2, 3});
    CHECK(a.parts() == std::vector<Int>{2, 3, 6});
    CHECK(to_string(a) == "(2,3,6)");
}

TEST_CASE("total weight, factor, reduction") {
    UfPartition a(2, {6, 6, 6});
    CHECK(total_weight_t(a) == 6);
    CHECK(factor_lambda(a) == 2);
    UfPartition red = reduce_ufp(a);
    CHECK(red.iota() == 1);
    CHECK(red.parts() == std::vector<Int>{3, 3, 3});

    a = UfPartition(1, {2, 3, 12, 12});
    CHECK(total_weight_t(a) == 12);
    CHECK(factor_lambda(a) == 1);
    CHECK(reduce_ufp(a) == a);

    a = UfPartition(2, {3, 7, 84, 84});
    CHECK(total_weight_t(a) == 84);
    CHECK(factor_lambda(a) == 1);
    CHECK(is_reduced_ufp(a));
}

TEST_CASE("well-formedness of uf-partitions") {
    CHECK(is_well_formed_ufp(UfPartition(1, {2, 3, 12, 12})));
    CHECK(is_well_formed_ufp(UfPartition(1, {2, 3, 10, 15})));
    CHECK(is_well_formed_ufp(UfPartition(1, {2, 4, 6, 12})));
    CHECK(is_well_formed_ufp(UfPartition(1, {2, 3, 7, 42})));
    CHECK_FALSE(is_well_formed_ufp(UfPartition(2, {3, 6}))); // 6 does not divide lcm(3) = 3
}

TEST_CASE("a_of_q") {
    UfPartition a = a_of_q(WeightSystem({1, 1, 1}));
    CHECK(a.iota() == 1);
    CHECK(a.parts() == std::vector<Int>{3, 3, 3});

    a = a_of_q(WeightSystem({3, 1, 1, 1}));
    CHECK(a.iota() == 1);
    CHECK(a.parts() == std::vector<Int>{2, 6, 6, 6});

    a = a_of_q(WeightSystem({28, 12, 1, 1}));
    CHECK(a.iota() == 2);
    CHECK(a.parts() == std::vector<Int>{3, 7, 84, 84});

    // the paired form keeps the entry-by-entry correspondence with q
    PairedUfPartition p = a_of_q_paired(WeightSystem({28, 12, 1, 1}));
    CHECK(p.paired == std::vector<Int>{3, 7, 84, 84});
    PairedUfPartition swapped = a_of_q_paired(WeightSystem({12, 28, 1, 1}));
    CHECK(swapped.paired == std::vector<Int>{7, 3, 84, 84});
    CHECK(swapped.partition == p.partition);
}

TEST_CASE("q_of_a") {
    CHECK(q_of_a(UfPartition(1, {2, 3, 12, 12})) == WeightSystem({6, 4, 1, 1}));
    CHECK(q_of_a(UfPartition(1, {3, 3, 3})) == WeightSystem({1, 1, 1}));
    CHECK(q_of_a(UfPartition(2, {3, 12, 12})) == WeightSystem({4, 1, 1}));
}

TEST_CASE("round trips") {
    auto rng = testutil::make_rng(707);
    for (int i = 0; i < 500; ++i) {
        WeightSystem q = testutil::random_weight_system(rng);
        PairedUfPartition a = a_of_q_paired(q);
        CHECK(factor_lambda(a.partition) == 1); // A(Q) is always reduced
        // the paired form reproduces Q_red entry for entry; the canonical
        // sorted form reproduces it up to order
        CHECK(q_of_parts(a.paired) == reduce(q));
        CHECK(equal_up_to_order(q_of_a(a.partition), reduce(q)));
        CHECK(is_well_formed(reduce(q)) == is_well_formed_ufp(a.partition));
    }
    // A(Q(A)) = A_red on a couple of non-reduced partitions
    UfPartition a(2, {6, 6, 6});
    CHECK(a_of_q(q_of_a(a)) == reduce_ufp(a));
    a = UfPartition(3, {6, 9, 18});
    CHECK(a_of_q(q_of_a(a)) == reduce_ufp(a));
}

TEST_CASE("det G closed form vs matrix") {
    CHECK(det_g_closed(1, {2, 3, 6}) == 0);
    CHECK(det_g_closed(2, {3, 7, 42}) == 0);
    CHECK(det_g_closed(1, {3, 3}) == 3);
    CHECK(det_g_matrix(1, {3, 3}) == 3);

    auto rng = testutil::make_rng(808);
    for (int i = 0; i < 300; ++i) {
        int n = static_cast<int>(testutil::random_int(rng, 1, 6).get_si());
        Int iota = testutil::random_int(rng, 1, 10);
        std::vector<Int> parts;
        for (int k = 0; k < n; ++k) parts.push_back(testutil::random_int(rng, 1, 50));
        Int closed = det_g_closed(iota, parts);
        CHECK(closed == det_g_matrix(iota, parts));
        // zero exactly when the reciprocals sum to 1/iota
        Rat sum(0);
        for (const Int& p : parts) sum += make_rat(1, p);
        CHECK((closed == 0) == (sum == make_rat(1, iota)));
    }
}

TEST_CASE("region conditions hold for uf-partitions") {
    CHECK(region_condition_violation(UfPartition(1, {2, 3, 6})) == 0);
    CHECK(region_condition_violation(UfPartition(2, {6, 6, 6})) == 0);
    CHECK(region_condition_violation(UfPartition(1, {2, 3, 7, 42})) == 0);
    CHECK(region_condition_violation(UfPartition(4, {5, 40, 40})) == 0);
}
