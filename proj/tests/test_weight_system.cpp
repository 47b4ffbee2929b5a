#include <doctest.h>

#include "fwps/weight_system.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fwps;

TEST_CASE("total_weight") {
    CHECK(total_weight(WeightSystem({1, 1, 1})) == 3);
    CHECK(total_weight(WeightSystem({6, 4, 1, 1})) == 12);
    CHECK(total_weight(WeightSystem({28, 12, 1, 1})) == 42);
}

TEST_CASE("factor and reduce") {
    WeightSystem q({2, 4, 6});
    CHECK(factor(q) == 2);
    CHECK(reduce(q) == WeightSystem({1, 2, 3}));

    q = WeightSystem({4, 2, 2});
    CHECK(factor(q) == 2);
    CHECK(reduce(q) == WeightSystem({2, 1, 1}));

    q = WeightSystem({6, 6, 6});
    CHECK(factor(q) == 6);
    CHECK(reduce(q) == WeightSystem({1, 1, 1}));

    CHECK(reduce(reduce(q)) == reduce(q));
    CHECK(factor(reduce(q)) == 1);
}

TEST_CASE("is_well_formed") {
    CHECK(is_well_formed(WeightSystem({6, 4, 1, 1})));
    CHECK_FALSE(is_well_formed(WeightSystem({2, 2, 1})));
    CHECK(is_well_formed(WeightSystem({1, 1, 1, 1, 1})));
    CHECK_FALSE(is_well_formed(WeightSystem({6, 10, 15}))); // dropping 6 leaves gcd 5
    CHECK(is_well_formed(WeightSystem({5, 3, 2})));
}

TEST_CASE("index closed form") {
    CHECK(index(WeightSystem({1, 1, 1})) == 1);
    CHECK(index(WeightSystem({3, 1, 1, 1})) == 1);
    CHECK(index(WeightSystem({28, 12, 1, 1})) == 2);
    CHECK(index(WeightSystem({4, 1, 1})) == 2);
    CHECK(index(WeightSystem({4, 2, 2})) == 1);
}

TEST_CASE("index agrees with definitional scan") {
    auto rng = testutil::make_rng(505);
    int checked = 0;
    while (checked < 200) {
        WeightSystem q = testutil::random_weight_system(rng, 5, 40);
        Int idx = index(q);
        if (idx > 100000) continue; // keep the scan oracle cheap
        CHECK(idx == oracle::index_by_scan(q));
        // minimality straight from the definition
        Int total = total_weight(q);
        for (Int k = 1; k < idx; ++k) {
            bool all = true;
            for (const Int& w : q.weights()) {
                Int scaled = k * total;
                if (!mpz_divisible_p(scaled.get_mpz_t(), w.get_mpz_t())) { all = false; break; }
            }
            CHECK_FALSE(all);
        }
        ++checked;
    }
}

TEST_CASE("degree on fixed weight systems") {
    CHECK(degree(WeightSystem({1, 1, 1})) == Rat(9));
    CHECK(degree(WeightSystem({6, 4, 1, 1})) == Rat(72));
    CHECK(degree(WeightSystem({28, 12, 1, 1})) == make_rat(441, 2));
    CHECK(degree(WeightSystem({4, 2, 2})) == Rat(4));
    CHECK(degree(WeightSystem({1, 1})) == Rat(2)); // P^1
}

TEST_CASE("degree scales inversely with lambda") {
    auto rng = testutil::make_rng(606);
    for (int i = 0; i < 200; ++i) {
        WeightSystem q = testutil::random_weight_system(rng);
        Int lambda = testutil::random_int(rng, 1, 9);
        CHECK(degree(q, lambda) * Rat(lambda) == degree(q, 1));
        CHECK(degree(q, 1) > 0);
        // denominator divides factor * product of the reduced weights; for
        // reduced q that is just the product of the weights
        WeightSystem red = reduce(q);
        Int prod = factor(q);
        for (const Int& w : red.weights()) prod *= w;
        Rat deg = degree(q, 1);
        CHECK(mpz_divisible_p(prod.get_mpz_t(), deg.get_den().get_mpz_t()));
        Int red_prod = 1;
        for (const Int& w : red.weights()) red_prod *= w;
        Rat red_deg = degree(red, 1);
        CHECK(mpz_divisible_p(red_prod.get_mpz_t(), red_deg.get_den().get_mpz_t()));
    }
}

TEST_CASE("weight order is preserved") {
    WeightSystem q({1, 4, 2});
    CHECK(q.weights() == std::vector<Int>{1, 4, 2});
    CHECK(equal_up_to_order(q, WeightSystem({4, 2, 1})));
    CHECK_FALSE(equal_up_to_order(q, WeightSystem({4, 2, 2})));
    CHECK(to_string(q) == "(1,4,2)");
}

TEST_CASE("weight system validation") {
    CHECK_THROWS(WeightSystem({1}));
    CHECK_THROWS(WeightSystem({1, 0}));
    CHECK_THROWS(WeightSystem({1, -2}));
}
