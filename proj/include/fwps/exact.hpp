#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fwps {

// All arithmetic in this library is exact. Integers are arbitrary precision
// (the Sylvester-type sequences grow doubly exponentially), rationals are
// kept in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form (lowest terms, den > 0). Throws on den == 0.
Rat make_rat(const Int& num, const Int& den);

std::string to_string(const Int& v);
std::string to_string(const Rat& v); // always "num/den", including "/1"

/// gcd of all values; gcd of an all-zero list is 0. Throws on empty input.
Int gcd_many(const std::vector<Int>& values);

/// lcm of all values. Throws on empty input or any value < 1.
Int lcm_many(const std::vector<Int>& values);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    void swap_rows(int a, int b);

    /// Copy with column c removed.
    IntMatrix drop_col(int c) const;

    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Int> entries_;
};

/// Exact determinant via fraction-free (Bareiss) elimination: every
/// intermediate value stays an integer. Throws on non-square input.
Int det_exact(const IntMatrix& m);

/// Exact solution of m*x = rhs for square nonsingular m.
/// Throws "singular" when det(m) == 0.
std::vector<Rat> solve_exact(const IntMatrix& m, const std::vector<Int>& rhs);

/// For a primitive vector q of length d+1 returns a d x (d+1) integer matrix B
/// with B*q^T = 0 whose d x d minors have gcd 1 (B maps Z^{d+1} onto Z^d).
/// B is canonicalized to row Hermite form, so the output is deterministic.
/// Throws "weights not reduced" unless gcd(q) == 1.
IntMatrix kernel_complement(const std::vector<Int>& q);

} // namespace fwps
