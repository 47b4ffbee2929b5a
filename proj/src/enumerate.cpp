#include "fwps/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fwps {

namespace {

std::string frontier_string(const std::vector<Int>& prefix) {
    if (prefix.empty()) return "(...)";
    std::string s = "(";
    for (size_t i = 0; i < prefix.size(); ++i) {
        if (i) s += ",";
        s += prefix[i].get_str();
    }
    return s + ",...)";
}

// One recursion step: remaining fraction p/q in lowest terms, `slots` parts
// still to place, all of them >= lo. The candidate range is exact:
//   a > q/p        (the remainder after a must stay positive),
//   a <= slots*q/p (the largest remaining reciprocal is at least (p/q)/slots).
void recurse_serial(const Int& p, const Int& q, int slots, const Int& lo,
                    std::vector<Int>& prefix,
                    std::vector<std::vector<Int>>& out,
                    std::uint64_t& nodes, std::uint64_t budget) {
    if (++nodes > budget) throw BudgetExceeded(budget, frontier_string(prefix));
    if (slots == 1) {
        if (p == 1 && q >= lo) {
            prefix.push_back(q);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    Int a = q / p + 1;
    if (a < lo) a = lo;
    Int amax = (slots * q) / p;
    for (; a <= amax; ++a) {
        Int np = p * a - q;
        Int nq = q * a;
        Int g;
        mpz_gcd(g.get_mpz_t(), np.get_mpz_t(), nq.get_mpz_t());
        mpz_divexact(np.get_mpz_t(), np.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(nq.get_mpz_t(), nq.get_mpz_t(), g.get_mpz_t());
        prefix.push_back(a);
        recurse_serial(np, nq, slots - 1, a, prefix, out, nodes, budget);
        prefix.pop_back();
    }
}

// Shared state for the parallel kernel. Budget exhaustion is signalled
// through a flag instead of an exception so it can unwind out of an OpenMP
// region. Tasks count nodes locally and flush in batches: the shared counter
// stays cold, and whether the budget suffices remains deterministic (success
// iff the scheduling-independent node total fits). Only the frontier named
// in the error can vary between parallel runs.
struct SearchCtx {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t budget = 0;
    std::atomic<bool> exceeded{false};
    std::atomic<long> total_spawned{0};
    std::mutex frontier_mutex;
    std::string frontier;
};

constexpr std::uint64_t kNodeFlushBatch = 4096;
constexpr long kInnerBlock = 64;       // min candidates per task when subtrees hang below
constexpr long kLeafBlock = 8192;      // min candidates per task for flat leaf scans
constexpr long kMaxBlocksPerNode = 128;
constexpr long kSpawnTotalCap = 1000000; // safety valve, not a tuning knob

void flush_nodes(SearchCtx& ctx, std::uint64_t& local, const std::vector<Int>& prefix) {
    if (local == 0) return;
    std::uint64_t before = ctx.nodes.fetch_add(local, std::memory_order_relaxed);
    if (before + local > ctx.budget) {
        bool expected = false;
        if (ctx.exceeded.compare_exchange_strong(expected, true)) {
            std::lock_guard<std::mutex> lock(ctx.frontier_mutex);
            ctx.frontier = frontier_string(prefix);
        }
    }
    local = 0;
}

bool try_reserve_tasks(SearchCtx& ctx, long k) {
    long prev = ctx.total_spawned.fetch_add(k, std::memory_order_relaxed);
    if (prev + k <= kSpawnTotalCap) return true;
    ctx.total_spawned.fetch_sub(k, std::memory_order_relaxed);
    return false;
}

EnumerationReport build_report(const Int& iota, int n,
                               std::vector<std::vector<Int>> tuples,
                               std::uint64_t nodes) {
    EnumerationReport report;
    report.iota = iota;
    report.n = n;
    report.nodes = nodes;
    report.partitions.reserve(tuples.size());
    for (auto& t : tuples) report.partitions.emplace_back(iota, std::move(t));

    report.max_product = 0;
    for (const UfPartition& a : report.partitions) {
        Int head = 1;
        for (int k = 0; k + 1 < a.length(); ++k) head *= a[k];
        if (head > report.max_product) {
            report.max_product = head;
            report.extremizers.clear();
            report.extremizers.push_back(a);
        } else if (head == report.max_product) {
            report.extremizers.push_back(a);
        }
    }

    Int t = sylvester_t(iota, n - 1);
    report.bound_value = make_rat(2 * t * t, iota);
    Rat max_rat(report.max_product);
    if (max_rat == report.bound_value) report.bound_status = BoundStatus::Matches;
    else if (max_rat > report.bound_value) report.bound_status = BoundStatus::Exceeds;
    else report.bound_status = BoundStatus::Below;
    return report;
}

void check_args(const Int& iota, int n) {
    if (iota < 1) throw std::invalid_argument("iota must be positive");
    if (n < 2) throw std::invalid_argument("length must be at least 2");
}

} // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t budget, const std::string& frontier)
    : std::runtime_error("node budget " + std::to_string(budget) +
                         " exceeded at frontier " + frontier) {}

EnumerationReport enumerate_ufp_serial(const Int& iota, int n,
                                       const EnumerationOptions& opts) {
    check_args(iota, n);
    std::vector<std::vector<Int>> out;
    std::vector<Int> prefix;
    std::uint64_t nodes = 0;
    recurse_serial(1, iota, n, 1, prefix, out, nodes, opts.budget);
    return build_report(iota, n, std::move(out), nodes);
}

namespace {

// One candidate step shared by the inline and block paths: reduce the
// remaining fraction and recurse.
template <typename Rec>
void candidate_step(const Int& p, const Int& q, int slots, const Int& a,
                    std::vector<Int>& prefix, Rec&& rec) {
    Int np = p * a - q;
    Int nq = q * a;
    Int g;
    mpz_gcd(g.get_mpz_t(), np.get_mpz_t(), nq.get_mpz_t());
    mpz_divexact(np.get_mpz_t(), np.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(nq.get_mpz_t(), nq.get_mpz_t(), g.get_mpz_t());
    prefix.push_back(a);
    rec(np, nq, slots - 1, a, prefix);
    prefix.pop_back();
}

// Same tree walk as recurse_serial (node for node, emission for emission),
// except that a wide candidate range is partitioned into contiguous blocks
// that run as OpenMP tasks. Each block writes into its own buffer; buffers
// are concatenated in block order after taskwait, so the output is the
// serial DFS order no matter how tasks were scheduled. Work-stealing across
// blocks is what balances the heavily skewed subtrees hanging off
// Sylvester-type prefixes; flat leaf scans split too, just in much coarser
// blocks since a leaf candidate is two divisions of work.
void recurse_omp(const Int& p, const Int& q, int slots, const Int& lo,
                 std::vector<Int>& prefix, std::vector<std::vector<Int>>& out,
                 SearchCtx& ctx, std::uint64_t& local) {
    if (++local >= kNodeFlushBatch) {
        flush_nodes(ctx, local, prefix);
        if (ctx.exceeded.load(std::memory_order_relaxed)) return;
    }
    if (slots == 1) {
        if (p == 1 && q >= lo) {
            prefix.push_back(q);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    Int a0 = q / p + 1;
    if (a0 < lo) a0 = lo;
    Int amax = (slots * q) / p;
    if (a0 > amax) return;

#ifdef _OPENMP
    if (omp_in_parallel()) {
        long min_block = slots >= 3 ? kInnerBlock : kLeafBlock;
        Int width = amax - a0 + 1;
        long nblocks = 0;
        if (width >= 2 * min_block)
            nblocks = (width >= Int(kMaxBlocksPerNode) * min_block)
                          ? kMaxBlocksPerNode
                          : Int(width / min_block).get_si();
        if (nblocks >= 2 && try_reserve_tasks(ctx, nblocks)) {
            struct Block {
                Int p, q, lo, hi;
                int slots;
                std::vector<Int> prefix;
            };
            Int step = (width + nblocks - 1) / nblocks;
            std::vector<Block> blocks;
            blocks.reserve(nblocks);
            std::vector<std::vector<std::vector<Int>>> bufs(nblocks);
            for (long i = 0; i < nblocks; ++i) {
                Int blo = a0 + i * step;
                Int bhi = blo + step - 1;
                if (bhi > amax) bhi = amax;
                blocks.push_back(Block{p, q, std::move(blo), std::move(bhi), slots, prefix});
            }
            SearchCtx* cp = &ctx;
            for (long i = 0; i < nblocks; ++i) {
                Block* blk = &blocks[i];
                std::vector<std::vector<Int>>* buf = &bufs[i];
#pragma omp task firstprivate(blk, buf, cp)
                {
                    std::uint64_t task_local = 0;
                    for (Int a = blk->lo; a <= blk->hi; ++a) {
                        candidate_step(blk->p, blk->q, blk->slots, a, blk->prefix,
                                       [&](const Int& np, const Int& nq, int s,
                                           const Int& nlo, std::vector<Int>& pfx) {
                                           recurse_omp(np, nq, s, nlo, pfx, *buf, *cp,
                                                       task_local);
                                       });
                        if (cp->exceeded.load(std::memory_order_relaxed)) break;
                    }
                    flush_nodes(*cp, task_local, blk->prefix);
                }
            }
#pragma omp taskwait
            for (auto& b : bufs)
                for (auto& t : b) out.push_back(std::move(t));
            return;
        }
    }
#endif

    for (Int a = a0; a <= amax; ++a) {
        candidate_step(p, q, slots, a, prefix,
                       [&](const Int& np, const Int& nq, int s, const Int& nlo,
                           std::vector<Int>& pfx) {
                           recurse_omp(np, nq, s, nlo, pfx, out, ctx, local);
                       });
        if (ctx.exceeded.load(std::memory_order_relaxed)) return;
    }
}

} // namespace

EnumerationReport enumerate_ufp_parallel(const Int& iota, int n,
                                         const EnumerationOptions& opts) {
    check_args(iota, n);
    SearchCtx ctx;
    ctx.budget = opts.budget;
    std::vector<std::vector<Int>> out;
    std::vector<Int> prefix;
    std::uint64_t local = 0;
#ifdef _OPENMP
#pragma omp parallel
#pragma omp single
    {
        recurse_omp(1, iota, n, 1, prefix, out, ctx, local);
        flush_nodes(ctx, local, prefix);
    }
#else
    recurse_omp(1, iota, n, 1, prefix, out, ctx, local);
    flush_nodes(ctx, local, prefix);
#endif

    if (ctx.exceeded.load() || ctx.nodes.load() > opts.budget)
        throw BudgetExceeded(opts.budget, ctx.frontier.empty() ? "(...)" : ctx.frontier);
    return build_report(iota, n, std::move(out), ctx.nodes.load());
}

EnumerationReport enumerate_ufp(const Int& iota, int n, const EnumerationOptions& opts) {
    switch (opts.mode) {
    case EnumerationOptions::Mode::Serial:
        return enumerate_ufp_serial(iota, n, opts);
    case EnumerationOptions::Mode::Parallel:
        return enumerate_ufp_parallel(iota, n, opts);
    case EnumerationOptions::Mode::Auto:
    default:
#ifdef _OPENMP
        return enumerate_ufp_parallel(iota, n, opts);
#else
        return enumerate_ufp_serial(iota, n, opts);
#endif
    }
}

SharpnessVerdict verify_sharpness(const Int& iota, int n, const EnumerationOptions& opts) {
    if (n < 3) throw std::invalid_argument("sharpness check needs length >= 3");
    SharpnessVerdict v;
    v.report = enumerate_ufp(iota, n, opts);

    if (iota == 1 && n == 3) {
        // the one excluded case: the maximum is 9, above 2*t^2/iota = 8
        v.is_exception = true;
        v.expected_extremizers.emplace_back(Int(1), std::vector<Int>{3, 3, 3});
        v.bound_ok = v.report.bound_status == BoundStatus::Exceeds &&
                     v.report.max_product == 9 && v.report.bound_value == Rat(8);
    } else {
        v.expected_extremizers.push_back(syl_partition(iota, n));
        if (iota == 2 && n == 3)
            v.expected_extremizers.emplace_back(Int(2), std::vector<Int>{6, 6, 6});
        if (iota == 1 && n == 4)
            v.expected_extremizers.emplace_back(Int(1), std::vector<Int>{2, 6, 6, 6});
        std::sort(v.expected_extremizers.begin(), v.expected_extremizers.end());
        v.bound_ok = v.report.bound_status == BoundStatus::Matches;
    }
    v.extremizers_match = v.report.extremizers == v.expected_extremizers;
    return v;
}

RegionVerdict verify_region(const Int& iota, int n, const EnumerationOptions& opts) {
    EnumerationReport report = enumerate_ufp(iota, n, opts);
    RegionVerdict v;
    v.checked = report.count();
    for (const UfPartition& a : report.partitions) {
        int k = region_condition_violation(a);
        if (k != 0) v.failures.emplace_back(a, k);
    }
    return v;
}

MaxDegreeResult max_degree_over_partitions(const Int& iota, int d,
                                           const EnumerationOptions& opts) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    EnumerationReport report = enumerate_ufp(iota, d + 1, opts);
    Int iota_pow;
    mpz_pow_ui(iota_pow.get_mpz_t(), iota.get_mpz_t(), d);

    MaxDegreeResult res;
    res.max_degree = Rat(0);
    for (const UfPartition& a : report.partitions) {
        Int prod = 1;
        for (const Int& p : a.parts()) prod *= p;
        Rat val = make_rat(prod, iota_pow * total_weight_t(a));
        if (val > res.max_degree) {
            res.max_degree = val;
            res.witnesses.clear();
            res.witnesses.push_back(a);
        } else if (val == res.max_degree) {
            res.witnesses.push_back(a);
        }
    }
    for (const UfPartition& a : res.witnesses) {
        if (is_reduced_ufp(a)) res.attainer_candidates.push_back(q_of_a(a));
        else res.non_reduced_witnesses.push_back(a);
    }
    return res;
}

} // namespace fwps
