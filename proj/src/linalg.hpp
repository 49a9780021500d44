#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grhom {

/* Error raised for mathematical domain problems (division by zero,
 * not-a-complex inputs, ring mismatches...).  The CLI maps it to exit code 2. */
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Arithmetic in the prime field GF(p), p < 2^31.  Primality is checked at
 * construction; every other operation assumes reduced inputs in [0, p). */
class PrimeField {
public:
    explicit PrimeField(uint32_t p);

    uint32_t modulus() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const
    {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const
    {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;

    /* reduce an arbitrary signed integer into [0, p) */
    uint32_t from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        if (r < 0)
            r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

/* Dense matrix over GF(p), row major. */
class DenseMatrix {
public:
    DenseMatrix(PrimeField field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0)
    {
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    uint32_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, uint32_t v) { a_[static_cast<size_t>(i) * cols_ + j] = v; }
    uint32_t* row(int i) { return a_.data() + static_cast<size_t>(i) * cols_; }
    const uint32_t* row(int i) const { return a_.data() + static_cast<size_t>(i) * cols_; }

    bool is_zero() const;
    static DenseMatrix identity(PrimeField field, int n);

private:
    PrimeField field_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

struct RowReduceResult {
    int rank = 0;
    std::vector<int> pivot_columns;
    /* basis of the right kernel, one vector (length = cols) per element */
    std::vector<std::vector<uint32_t>> kernel;
};

RowReduceResult row_reduce(const DenseMatrix& m);

int matrix_rank(const DenseMatrix& m);

struct CohomologyBasis {
    int dim = 0;
    /* cycles completing a basis of the boundaries to a basis of the cycles */
    std::vector<std::vector<uint32_t>> basis;
};

/* Cohomology at the middle spot of  U --d_in--> V --d_out--> W.
 * check_composite verifies d_out * d_in == 0 and throws MathError otherwise;
 * internal callers that already validated the complex may skip it. */
CohomologyBasis cohomology_rank(const DenseMatrix& d_in, const DenseMatrix& d_out,
                                bool check_composite = true);

} // namespace grhom
