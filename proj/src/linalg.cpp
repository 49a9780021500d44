#include "linalg.hpp"

namespace grhom {

namespace {

bool is_prime_u32(uint32_t p)
{
    if (p < 2)
        return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/* r_dst += c * r_src over GF(p), n entries */
void axpy_row(uint32_t* dst, const uint32_t* src, uint32_t c, int n, uint32_t p)
{
    if (c == 0)
        return;
    for (int k = 0; k < n; ++k) {
        uint64_t t = dst[k] + static_cast<uint64_t>(c) * src[k];
        dst[k] = static_cast<uint32_t>(t % p);
    }
}

} // namespace

PrimeField::PrimeField(uint32_t p) : p_(p)
{
    if (p >= (1u << 31))
        throw MathError("prime modulus must be < 2^31");
    if (!is_prime_u32(p))
        throw MathError("modulus " + std::to_string(p) + " is not prime");
}

uint32_t PrimeField::inv(uint32_t a) const
{
    if (a == 0)
        throw MathError("division by zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid
    int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0)
        t0 += p_;
    return static_cast<uint32_t>(t0);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const
{
    uint32_t r = 1 % p_;
    uint32_t b = a % p_;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool DenseMatrix::is_zero() const
{
    for (uint32_t v : a_)
        if (v != 0)
            return false;
    return true;
}

DenseMatrix DenseMatrix::identity(PrimeField field, int n)
{
    DenseMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols() != b.rows())
        throw MathError("matmul: shape mismatch");
    const uint32_t p = a.field().modulus();
    DenseMatrix c(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            uint32_t aik = a.at(i, k);
            if (aik == 0)
                continue;
            axpy_row(c.row(i), b.row(k), aik, b.cols(), p);
        }
    }
    return c;
}

RowReduceResult row_reduce(const DenseMatrix& m)
{
    const PrimeField& F = m.field();
    const uint32_t p = F.modulus();
    DenseMatrix w = m;
    const int rows = w.rows(), cols = w.cols();

    RowReduceResult out;
    int r = 0; // next pivot row
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int k = 0; k < cols; ++k) {
                uint32_t t = w.at(piv, k);
                w.set(piv, k, w.at(r, k));
                w.set(r, k, t);
            }
        uint32_t ipv = F.inv(w.at(r, c));
        for (int k = c; k < cols; ++k)
            w.set(r, k, F.mul(w.at(r, k), ipv));
        for (int i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            uint32_t v = w.at(i, c);
            if (v)
                axpy_row(w.row(i), w.row(r), p - v, cols, p);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = r;

    // kernel basis from the reduced echelon form: one vector per free column
    std::vector<int> pivot_of_col(cols, -1);
    for (int k = 0; k < static_cast<int>(out.pivot_columns.size()); ++k)
        pivot_of_col[out.pivot_columns[k]] = k;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0)
            continue;
        std::vector<uint32_t> v(cols, 0);
        v[c] = 1;
        for (int k = 0; k < static_cast<int>(out.pivot_columns.size()); ++k)
            v[out.pivot_columns[k]] = F.neg(w.at(k, c));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

int matrix_rank(const DenseMatrix& m)
{
    const PrimeField& F = m.field();
    const uint32_t p = F.modulus();
    DenseMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int k = c; k < cols; ++k) {
                uint32_t t = w.at(piv, k);
                w.set(piv, k, w.at(r, k));
                w.set(r, k, t);
            }
        uint32_t ipv = F.inv(w.at(r, c));
        for (int i = r + 1; i < rows; ++i) {
            uint32_t v = w.at(i, c);
            if (!v)
                continue;
            uint32_t f = F.mul(v, ipv);
            axpy_row(w.row(i) + c, w.row(r) + c, p - f, cols - c, p);
        }
        ++r;
    }
    return r;
}

CohomologyBasis cohomology_rank(const DenseMatrix& d_in, const DenseMatrix& d_out,
                                bool check_composite)
{
    if (d_in.cols() > 0 && d_out.cols() != d_in.rows())
        throw MathError("cohomology_rank: middle dimension mismatch");
    const PrimeField& F = d_out.field();
    const uint32_t p = F.modulus();
    const int n = d_out.cols(); // dim of the middle space

    if (check_composite && d_in.cols() > 0 && d_out.rows() > 0) {
        if (!matmul(d_out, d_in).is_zero())
            throw MathError("cohomology_rank: d_out * d_in != 0, not a complex");
    }

    RowReduceResult zr = row_reduce(d_out); // cycles = kernel of d_out
    int rank_in = matrix_rank(d_in);
    CohomologyBasis out;
    out.dim = static_cast<int>(zr.kernel.size()) - rank_in;

    // span the boundaries, then collect kernel vectors that enlarge the span
    DenseMatrix sp(F, rank_in + static_cast<int>(zr.kernel.size()), n);
    int used = 0;
    auto reduce_against = [&](std::vector<uint32_t>& v) {
        // gaussian elimination of v against rows 0..used-1 of sp (each with a
        // recorded pivot); returns pivot position of the residue or -1
        for (int i = 0; i < used; ++i) {
            int pc = -1;
            for (int k = 0; k < n; ++k)
                if (sp.at(i, k) != 0) {
                    pc = k;
                    break;
                }
            if (pc < 0)
                continue;
            if (v[pc]) {
                uint32_t f = F.div(v[pc], sp.at(i, pc));
                axpy_row(v.data(), sp.row(i), p - f, n, p);
            }
        }
        for (int k = 0; k < n; ++k)
            if (v[k])
                return k;
        return -1;
    };
    for (int j = 0; j < d_in.cols(); ++j) {
        std::vector<uint32_t> v(n, 0);
        for (int i = 0; i < d_in.rows(); ++i)
            v[i] = d_in.at(i, j);
        if (reduce_against(v) >= 0) {
            for (int k = 0; k < n; ++k)
                sp.set(used, k, v[k]);
            ++used;
        }
    }
    for (auto& z : zr.kernel) {
        std::vector<uint32_t> v = z;
        if (reduce_against(v) >= 0) {
            out.basis.push_back(z); // the original cycle, not the residue
            for (int k = 0; k < n; ++k)
                sp.set(used, k, v[k]);
            ++used;
        }
    }
    if (static_cast<int>(out.basis.size()) != out.dim)
        throw MathError("cohomology_rank: basis extraction inconsistent");
    return out;
}

} // namespace grhom
