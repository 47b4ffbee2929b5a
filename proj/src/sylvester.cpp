#include "fwps/sylvester.hpp"

#include <map>
#include <mutex>

namespace fwps {

namespace {

std::mutex cache_mutex;
std::map<Int, std::vector<Int>> s_cache; // s_cache[iota][k-1] = s_{iota,k}

std::vector<Int> s_prefix(const Int& iota, int k) {
    if (iota < 1) throw std::invalid_argument("iota must be positive");
    if (k < 1) throw std::invalid_argument("sequence index must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    std::vector<Int>& seq = s_cache[iota];
    if (seq.empty()) seq.push_back(iota + 1);
    while (static_cast<int>(seq.size()) < k) {
        const Int& last = seq.back();
        seq.push_back(last * (last - 1) + 1);
    }
    return std::vector<Int>(seq.begin(), seq.begin() + k);
}

} // namespace

Int sylvester_s(const Int& iota, int k) {
    return s_prefix(iota, k)[k - 1];
}

Int sylvester_t(const Int& iota, int k) {
    return sylvester_s(iota, k) - 1;
}

UfPartition syl_partition(const Int& iota, int n) {
    if (n < 3) throw std::invalid_argument("enlarged sylvester partition needs length >= 3");
    std::vector<Int> s = s_prefix(iota, n - 1);
    std::vector<Int> parts(s.begin(), s.begin() + (n - 2));
    Int tail = 2 * (s[n - 2] - 1); // 2*t_{iota,n-1}
    parts.push_back(tail);
    parts.push_back(tail);
    return UfPartition(iota, std::move(parts)); // construction re-validates the sum
}

WeightSystem extremal_weights(const Int& iota, int d) {
    if (d < 2) throw std::invalid_argument("extremal weights need dimension >= 2");
    std::vector<Int> s = s_prefix(iota, d);
    Int twice_t = 2 * (s[d - 1] - 1); // 2*t_{iota,d}
    std::vector<Int> w;
    w.reserve(d + 1);
    for (int k = 0; k + 1 < d; ++k) {
        Int e;
        mpz_divexact(e.get_mpz_t(), twice_t.get_mpz_t(), s[k].get_mpz_t());
        w.push_back(std::move(e));
    }
    w.emplace_back(1);
    w.emplace_back(1);
    WeightSystem direct(std::move(w));
    WeightSystem via_partition = q_of_a(syl_partition(iota, d + 1));
    if (!(direct == via_partition))
        throw std::logic_error("extremal weight construction routes disagree");
    return direct;
}

Rat degree_bound(const Int& iota, int d) {
    if (iota < 1) throw std::invalid_argument("iota must be positive");
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    if (d == 1) return Rat(2);
    if (d == 2 && iota == 1) return Rat(9);
    Int t = sylvester_t(iota, d);
    Int den;
    mpz_pow_ui(den.get_mpz_t(), iota.get_mpz_t(), d + 1);
    return make_rat(2 * t * t, den);
}

std::vector<WeightSystem> attainers(const Int& iota, int d) {
    if (iota < 1) throw std::invalid_argument("iota must be positive");
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    if (d == 1) return {WeightSystem({1, 1})};
    if (iota == 1 && d == 2) return {WeightSystem({1, 1, 1})};
    if (iota == 1 && d == 3)
        return {WeightSystem({3, 1, 1, 1}), WeightSystem({6, 4, 1, 1})};
    return {extremal_weights(iota, d)};
}

IneqStatus check_product_inequality(const Int& iota, int n, int r) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (r < 1 || r > n) throw std::invalid_argument("r out of range");
    Int lhs;
    {
        Int base = r + 1;
        mpz_pow_ui(lhs.get_mpz_t(), base.get_mpz_t(), r);
        Int t;
        mpz_pow_ui(t.get_mpz_t(), sylvester_t(iota, n - r + 1).get_mpz_t(), r + 1);
        lhs *= t;
    }
    Int tn = sylvester_t(iota, n);
    Int rhs = 2 * tn * tn;
    if (lhs < rhs) return IneqStatus::Strict;
    if (lhs == rhs) return IneqStatus::Equality;
    return IneqStatus::Exception;
}

} // namespace fwps
