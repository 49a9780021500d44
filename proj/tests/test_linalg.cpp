#include "doctest.h"

#include "linalg.hpp"

#include <random>

using namespace grhom;

TEST_CASE("field inverse basics")
{
    PrimeField f5(5);
    CHECK(f5.inv(1) == 1);
    CHECK(f5.inv(2) == 3); // 2*3 = 6 = 1 mod 5

    // extended Euclid oracle value: 3 * 10668 = 32004 = 1 mod 32003
    PrimeField fp(32003);
    CHECK(fp.inv(3) == 10668);
    CHECK(fp.mul(3, fp.inv(3)) == 1);

    CHECK_THROWS_AS(fp.inv(0), MathError);
    CHECK_THROWS_AS(PrimeField(32004), MathError);
}

TEST_CASE("field inverse is an involution")
{
    PrimeField f(101);
    for (uint32_t a = 1; a < 101; ++a)
        CHECK(f.inv(f.inv(a)) == a);
}

TEST_CASE("row_reduce on simple matrices")
{
    PrimeField f(32003);

    DenseMatrix id3 = DenseMatrix::identity(f, 3);
    auto r = row_reduce(id3);
    CHECK(r.rank == 3);
    CHECK(r.kernel.empty());

    DenseMatrix z(f, 2, 4);
    auto rz = row_reduce(z);
    CHECK(rz.rank == 0);
    CHECK(rz.kernel.size() == 4);

    // [[1,2],[2,4]] over GF(5): rank 1, kernel dim 1 (hand elimination)
    PrimeField f5(5);
    DenseMatrix m(f5, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 4);
    auto rm = row_reduce(m);
    CHECK(rm.rank == 1);
    CHECK(rm.kernel.size() == 1);
    // kernel vector maps to zero
    const auto& k = rm.kernel[0];
    CHECK(f5.add(f5.mul(m.at(0, 0), k[0]), f5.mul(m.at(0, 1), k[1])) == 0);
}

TEST_CASE("rank plus nullity equals column count on random matrices")
{
    PrimeField f(32003);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        DenseMatrix m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.set(i, j, rng() % 7 == 0 ? 0 : rng() % 32003);
        auto r = row_reduce(m);
        CHECK(r.rank + static_cast<int>(r.kernel.size()) == cols);
        CHECK(r.rank == matrix_rank(m));
        for (const auto& k : r.kernel) {
            for (int i = 0; i < rows; ++i) {
                uint32_t acc = 0;
                for (int j = 0; j < cols; ++j)
                    acc = f.add(acc, f.mul(m.at(i, j), k[j]));
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("cohomology_rank basics")
{
    PrimeField f(32003);

    // zero differentials on a 4-dim space
    DenseMatrix din(f, 4, 0), dout(f, 0, 4);
    auto c = cohomology_rank(din, dout);
    CHECK(c.dim == 4);
    CHECK(c.basis.size() == 4);

    // exact two-term complex, identity k -> k
    DenseMatrix din2(f, 1, 1);
    din2.set(0, 0, 1);
    DenseMatrix dout2(f, 0, 1);
    auto c2 = cohomology_rank(din2, dout2);
    CHECK(c2.dim == 0);

    // composite nonzero is rejected
    DenseMatrix a(f, 1, 1), b(f, 1, 1);
    a.set(0, 0, 1);
    b.set(0, 0, 1);
    CHECK_THROWS_AS(cohomology_rank(a, b), MathError);
}

TEST_CASE("cohomology euler characteristic on a random bounded strand")
{
    // chain of maps with composite zero: d2 = projection composed to land in
    // ker(d1) constructed by hand
    PrimeField f(7);
    // spaces: 2 -> 3 -> 2 with d_out*d_in = 0
    DenseMatrix din(f, 3, 2);
    din.set(0, 0, 1);
    din.set(1, 1, 1);
    DenseMatrix dout(f, 2, 3);
    dout.set(0, 2, 1); // kills the image of din
    auto mid = cohomology_rank(din, dout);
    // dim = nullity(dout) - rank(din) = 2 - 2 = 0
    CHECK(mid.dim == 0);
}
