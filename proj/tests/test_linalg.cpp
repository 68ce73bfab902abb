#include <doctest.h>

#include <qsi/lattice.hpp>
#include <qsi/matrix.hpp>
#include <qsi/rep.hpp>

using namespace qsi;

namespace {

Matrix<Rational> from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix<Rational> m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (auto x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

Matrix<Fp> to_fp(const Matrix<Rational>& m, std::uint64_t p) {
    Matrix<Fp> out(m.rows(), m.cols(), Fp(0, p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = from_rational<Fp>(m(i, j), Fp(0, p));
    return out;
}

// brute-force grid oracle for the lattice solver
std::vector<IntVector> grid_enumerate(const IntMatrix& a, const IntVector& b,
                                      long long bound) {
    std::size_t n = a.empty() ? 0 : a[0].size();
    std::vector<IntVector> out;
    IntVector x(n, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t r = 0; r < b.size() && ok; ++r) {
            long long s = 0;
            for (std::size_t j = 0; j < n; ++j) s += a[r][j] * x[j];
            ok = s == b[r];
        }
        if (ok) out.push_back(x);
        std::size_t k = n;
        while (k > 0 && x[k - 1] == bound) x[--k] = 0;
        if (k == 0) break;
        ++x[k - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("rank_kernel on pinned cases") {
    auto id = Matrix<Rational>::identity(2);
    auto rk = rank_kernel(id);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel_basis.empty());

    Matrix<Rational> zero(2, 2);
    rk = rank_kernel(zero);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel_basis.size() == 2);

    // [[1,2],[2,4]]: rank 1, kernel spanned by (-2, 1) (hand row reduction)
    auto m = from_ints({{1, 2}, {2, 4}});
    rk = rank_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel_basis.size() == 1);
    const auto& v = rk.kernel_basis[0];
    CHECK(v[0] * Rational(1) + v[1] * Rational(2) == 0);
    CHECK(v[0] / v[1] == Rational(-2));
}

TEST_CASE("kernel vectors are annihilated and independent") {
    Sampler rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + rng.draw(0, 3), c = 1 + rng.draw(0, 3);
        Matrix<Rational> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.draw(-5, 5);
        auto rk = rank_kernel(m);
        CHECK(rk.rank + rk.kernel_basis.size() == c);
        Matrix<Rational> kmat(c, rk.kernel_basis.size());
        for (std::size_t j = 0; j < rk.kernel_basis.size(); ++j) {
            for (std::size_t i = 0; i < c; ++i) kmat(i, j) = rk.kernel_basis[j][i];
        }
        if (!rk.kernel_basis.empty()) {
            CHECK((m * kmat).is_zero_matrix());
            CHECK(rank(kmat) == rk.kernel_basis.size());
        }
    }
}

TEST_CASE("rank invariant under row permutation and scaling") {
    Sampler rng(7);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng.draw(0, 2);
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.draw(-4, 4);
        Matrix<Rational> perm = m;
        for (std::size_t j = 0; j < n; ++j) std::swap(perm(0, j), perm(n - 1, j));
        Matrix<Rational> scaled = m;
        for (std::size_t j = 0; j < n; ++j) scaled(0, j) *= Rational(7, 3);
        CHECK(rank(perm) == rank(m));
        CHECK(rank(scaled) == rank(m));
    }
}

TEST_CASE("prime field rank agrees with rational rank, p = 32003") {
    Sampler rng(23);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng.draw(0, 3), c = 1 + rng.draw(0, 3);
        Matrix<Rational> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.draw(-20, 20);
        CHECK(rank(to_fp(m, 32003)) == rank(m));
    }
}

TEST_CASE("matrix inverse round trip") {
    Sampler rng(5);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 1 + rng.draw(0, 3);
        Matrix<Rational> m(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.draw(-9, 9);
        } while (!is_invertible(m));
        CHECK(m * inverse(m) == Matrix<Rational>::identity(n));
    }
}

TEST_CASE("nonneg_lattice_solutions two-variable sum") {
    auto sols = nonneg_lattice_solutions({{1, 1}}, {2}, 2);
    REQUIRE(sols.size() == 3);
    CHECK(sols[0] == IntVector{0, 2});
    CHECK(sols[1] == IntVector{1, 1});
    CHECK(sols[2] == IntVector{2, 0});
}

TEST_CASE("nonneg_lattice_solutions zero rhs contains zero vector") {
    auto sols = nonneg_lattice_solutions({{1, -1}, {2, 1}}, {0, 0}, 3);
    CHECK(std::find(sols.begin(), sols.end(), IntVector{0, 0}) != sols.end());
}

TEST_CASE("lattice solver agrees with grid enumeration") {
    Sampler rng(99);
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = 1 + rng.draw(0, 1), cols = 1 + rng.draw(0, 3);
        IntMatrix a(rows, IntVector(cols));
        IntVector b(rows);
        for (auto& row : a)
            for (auto& x : row) x = rng.draw(-3, 3);
        for (auto& x : b) x = rng.draw(-4, 4);
        CHECK(nonneg_lattice_solutions(a, b, 4) == grid_enumerate(a, b, 4));
    }
}

TEST_CASE("Fp arithmetic basics") {
    Fp a(7, 32003), b(-3, 32003);
    CHECK(a + b == Fp(4, 32003));
    CHECK(a * b.inverse() * b == a);
    CHECK((b - b).value() == 0);
}
