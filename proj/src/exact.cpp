#include "fwps/exact.hpp"

#include <utility>

namespace fwps {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r;
    r.get_num() = num;
    r.get_den() = den;
    r.canonicalize();
    return r;
}

std::string to_string(const Int& v) {
    return v.get_str();
}

std::string to_string(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int gcd_many(const std::vector<Int>& values) {
    if (values.empty()) throw std::invalid_argument("empty input");
    Int g = 0;
    for (const Int& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int lcm_many(const std::vector<Int>& values) {
    if (values.empty()) throw std::invalid_argument("empty input");
    Int l = 1;
    for (const Int& v : values) {
        if (v < 1) throw std::invalid_argument("lcm requires positive values");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
    }
    return l;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    entries_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows x cols");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

IntMatrix IntMatrix::drop_col(int c) const {
    IntMatrix out(rows_, cols_ - 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0, k = 0; j < cols_; ++j)
            if (j != c) out.at(i, k++) = at(i, j);
    return out;
}

namespace {

// Bareiss forward elimination, in place, on the leading square block of
// width n of an n x m matrix (m >= n). Trailing columns are carried along,
// which is what solve_exact needs for its augmented system. Returns the
// determinant sign from row swaps, or 0 if the block is singular.
int bareiss_forward(IntMatrix& m, int n) {
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < m.cols(); ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // exact by the Bareiss identity
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    if (m.at(n - 1, n - 1) == 0) return 0;
    return sign;
}

} // namespace

Int det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("non-square matrix");
    IntMatrix w = m;
    int sign = bareiss_forward(w, w.rows());
    if (sign == 0) return 0;
    return sign > 0 ? w.at(w.rows() - 1, w.rows() - 1) : Int(-w.at(w.rows() - 1, w.rows() - 1));
}

std::vector<Rat> solve_exact(const IntMatrix& m, const std::vector<Int>& rhs) {
    if (m.rows() != m.cols()) throw std::invalid_argument("non-square matrix");
    int n = m.rows();
    if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("rhs size mismatch");

    IntMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    if (bareiss_forward(aug, n) == 0) throw std::invalid_argument("singular");

    // back substitution on the integer upper-triangular system
    std::vector<Rat> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat acc = Rat(aug.at(i, n));
        for (int j = i + 1; j < n; ++j) acc -= Rat(aug.at(i, j)) * x[j];
        x[i] = acc / Rat(aug.at(i, i));
    }
    return x;
}

namespace {

// Reduces B to its (unique) row Hermite form by unimodular row operations:
// pivots positive, entries above each pivot in [0, pivot).
void hermite_normalize(IntMatrix& b) {
    int r = 0;
    for (int c = 0; c < b.cols() && r < b.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < b.rows(); ++i)
            if (b.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        b.swap_rows(r, piv);
        for (int i = r + 1; i < b.rows(); ++i) {
            if (b.at(i, c) == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       b.at(r, c).get_mpz_t(), b.at(i, c).get_mpz_t());
            Int pr = b.at(r, c) / g;
            Int pi = b.at(i, c) / g;
            for (int j = 0; j < b.cols(); ++j) {
                Int rj = b.at(r, j);
                Int ij = b.at(i, j);
                b.at(r, j) = s * rj + t * ij;
                b.at(i, j) = pr * ij - pi * rj;
            }
        }
        if (b.at(r, c) < 0)
            for (int j = 0; j < b.cols(); ++j) b.at(r, j) = -b.at(r, j);
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), b.at(i, c).get_mpz_t(), b.at(r, c).get_mpz_t());
            if (q == 0) continue;
            for (int j = 0; j < b.cols(); ++j) b.at(i, j) -= q * b.at(r, j);
        }
        ++r;
    }
}

} // namespace

IntMatrix kernel_complement(const std::vector<Int>& q) {
    if (q.size() < 2) throw std::invalid_argument("need at least two weights");
    for (const Int& v : q)
        if (v < 1) throw std::invalid_argument("weights must be positive");
    if (gcd_many(q) != 1) throw std::invalid_argument("weights not reduced");

    int n = static_cast<int>(q.size());
    // Build unimodular U with U*q = (1,0,...,0)^T by chaining extended gcds,
    // then take the bottom n-1 rows: they annihilate q, and expanding det(U)
    // along its first row shows their maximal minors have gcd 1.
    IntMatrix u = IntMatrix::identity(n);
    std::vector<Int> c = q;
    for (int i = 1; i < n; ++i) {
        if (c[i] == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   c[0].get_mpz_t(), c[i].get_mpz_t());
        Int p0 = c[0] / g;
        Int pi = c[i] / g;
        for (int j = 0; j < n; ++j) {
            Int r0 = u.at(0, j);
            Int ri = u.at(i, j);
            u.at(0, j) = s * r0 + t * ri;
            u.at(i, j) = p0 * ri - pi * r0;
        }
        c[0] = g;
        c[i] = 0;
    }

    IntMatrix b(n - 1, n);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i - 1, j) = u.at(i, j);
    hermite_normalize(b);
    return b;
}

} // namespace fwps
