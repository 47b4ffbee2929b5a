#include "fwps/uf_partition.hpp"

#include <algorithm>

namespace fwps {

UfPartition::UfPartition(Int iota, std::vector<Int> parts)
    : iota_(std::move(iota)), parts_(std::move(parts)) {
    if (iota_ < 1) throw std::invalid_argument("iota must be positive");
    if (parts_.size() < 2) throw std::invalid_argument("uf-partition needs at least two parts");
    for (const Int& p : parts_)
        if (p < 1) throw std::invalid_argument("parts must be positive");
    std::sort(parts_.begin(), parts_.end());
    Rat sum(0);
    for (const Int& p : parts_) sum += make_rat(1, p);
    if (sum != make_rat(1, iota_))
        throw std::invalid_argument("not a uf-partition of 1/iota");
}

Int total_weight_t(const UfPartition& a) {
    return lcm_many(a.parts());
}

Int factor_lambda(const UfPartition& a) {
    Int g = a.iota();
    for (const Int& p : a.parts()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UfPartition reduce_ufp(const UfPartition& a) {
    Int lambda = factor_lambda(a);
    std::vector<Int> parts = a.parts();
    for (Int& p : parts) mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), lambda.get_mpz_t());
    return UfPartition(a.iota() / lambda, std::move(parts));
}

bool is_reduced_ufp(const UfPartition& a) {
    return factor_lambda(a) == 1;
}

bool is_well_formed_ufp(const UfPartition& a) {
    int n = a.length();
    std::vector<Int> pre(n + 1), suf(n + 1);
    pre[0] = 1;
    suf[n] = 1;
    for (int i = 0; i < n; ++i) {
        pre[i + 1] = pre[i];
        mpz_lcm(pre[i + 1].get_mpz_t(), pre[i + 1].get_mpz_t(), a[i].get_mpz_t());
    }
    for (int i = n - 1; i >= 0; --i) {
        suf[i] = suf[i + 1];
        mpz_lcm(suf[i].get_mpz_t(), suf[i].get_mpz_t(), a[i].get_mpz_t());
    }
    for (int i = 0; i < n; ++i) {
        Int rest;
        mpz_lcm(rest.get_mpz_t(), pre[i].get_mpz_t(), suf[i + 1].get_mpz_t());
        if (!mpz_divisible_p(rest.get_mpz_t(), a[i].get_mpz_t())) return false;
    }
    return true;
}

PairedUfPartition a_of_q_paired(const WeightSystem& q) {
    Int iota = index(q);
    Int scaled = iota * total_weight(q);
    std::vector<Int> paired;
    paired.reserve(q.size());
    for (const Int& w : q.weights()) {
        // q_i | iota*|Q| by the definition of the index
        Int part;
        mpz_divexact(part.get_mpz_t(), scaled.get_mpz_t(), w.get_mpz_t());
        paired.push_back(std::move(part));
    }
    UfPartition sorted(iota, paired);
    return PairedUfPartition{std::move(paired), std::move(sorted)};
}

UfPartition a_of_q(const WeightSystem& q) {
    return a_of_q_paired(q).partition;
}

WeightSystem q_of_a(const UfPartition& a) {
    return q_of_parts(a.parts());
}

WeightSystem q_of_parts(const std::vector<Int>& parts) {
    Int t = lcm_many(parts);
    std::vector<Int> weights;
    weights.reserve(parts.size());
    for (const Int& p : parts) {
        Int w;
        mpz_divexact(w.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        weights.push_back(std::move(w));
    }
    return WeightSystem(std::move(weights));
}

Int det_g_closed(const Int& iota, const std::vector<Int>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty input");
    Int prod = 1;
    for (const Int& p : parts) prod *= p;
    Int sum = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        Int term = 1;
        for (size_t j = 0; j < parts.size(); ++j)
            if (j != i) term *= parts[j];
        sum += term;
    }
    return prod - iota * sum;
}

Int det_g_matrix(const Int& iota, const std::vector<Int>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty input");
    int n = static_cast<int>(parts.size());
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.at(i, j) = (i == j) ? Int(parts[i] - iota) : Int(-iota);
    return det_exact(g);
}

int region_condition_violation(const UfPartition& a) {
    int n = a.length();
    // suffix reciprocal sums
    std::vector<Rat> tail(n + 1, Rat(0));
    for (int i = n - 1; i >= 0; --i) tail[i] = tail[i + 1] + make_rat(1, a[i]);
    if (tail[0] != make_rat(1, a.iota())) return -1; // cannot happen for a valid partition
    Rat head_prod(1);
    Rat iota_rat(a.iota());
    for (int k = 1; k < n; ++k) {
        head_prod *= make_rat(1, a[k - 1]);
        if (head_prod > iota_rat * tail[k]) return k;
    }
    return 0;
}

std::string to_string(const UfPartition& a) {
    std::string s = "(";
    for (int i = 0; i < a.length(); ++i) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    return s + ")";
}

} // namespace fwps
