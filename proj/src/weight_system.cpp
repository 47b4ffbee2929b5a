#include "fwps/weight_system.hpp"

#include <algorithm>

namespace fwps {

WeightSystem::WeightSystem(std::vector<Int> weights) : weights_(std::move(weights)) {
    if (weights_.size() < 2) throw std::invalid_argument("weight system needs at least two weights");
    for (const Int& w : weights_)
        if (w < 1) throw std::invalid_argument("weights must be positive");
}

Int total_weight(const WeightSystem& q) {
    Int s = 0;
    for (const Int& w : q.weights()) s += w;
    return s;
}

Int factor(const WeightSystem& q) {
    return gcd_many(q.weights());
}

WeightSystem reduce(const WeightSystem& q) {
    Int f = factor(q);
    std::vector<Int> w = q.weights();
    for (Int& v : w) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), f.get_mpz_t());
    return WeightSystem(std::move(w));
}

bool is_reduced(const WeightSystem& q) {
    return factor(q) == 1;
}

bool is_well_formed(const WeightSystem& q) {
    int n = q.size();
    // prefix/suffix gcds make this linear instead of quadratic
    std::vector<Int> pre(n + 1), suf(n + 1);
    pre[0] = 0;
    suf[n] = 0;
    for (int i = 0; i < n; ++i) {
        pre[i + 1] = pre[i];
        mpz_gcd(pre[i + 1].get_mpz_t(), pre[i + 1].get_mpz_t(), q[i].get_mpz_t());
    }
    for (int i = n - 1; i >= 0; --i) {
        suf[i] = suf[i + 1];
        mpz_gcd(suf[i].get_mpz_t(), suf[i].get_mpz_t(), q[i].get_mpz_t());
    }
    for (int i = 0; i < n; ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), pre[i].get_mpz_t(), suf[i + 1].get_mpz_t());
        if (g != 1) return false;
    }
    return true;
}

Int index(const WeightSystem& q) {
    Int total = total_weight(q);
    Int idx = 1;
    for (const Int& w : q.weights()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), w.get_mpz_t(), total.get_mpz_t());
        Int k = w / g;
        mpz_lcm(idx.get_mpz_t(), idx.get_mpz_t(), k.get_mpz_t());
    }
    return idx;
}

Rat degree(const WeightSystem& q, const Int& lambda_p) {
    if (lambda_p < 1) throw std::invalid_argument("lambda must be positive");
    WeightSystem red = reduce(q);
    Int lambda_total = lambda_p * factor(q);
    Int num;
    mpz_pow_ui(num.get_mpz_t(), total_weight(red).get_mpz_t(), red.dim());
    Int den = lambda_total;
    for (const Int& w : red.weights()) den *= w;
    return make_rat(num, den);
}

bool equal_up_to_order(const WeightSystem& a, const WeightSystem& b) {
    if (a.size() != b.size()) return false;
    std::vector<Int> x = a.weights(), y = b.weights();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

std::string to_string(const WeightSystem& q) {
    std::string s = "(";
    for (int i = 0; i < q.size(); ++i) {
        if (i) s += ",";
        s += q[i].get_str();
    }
    return s + ")";
}

} // namespace fwps
