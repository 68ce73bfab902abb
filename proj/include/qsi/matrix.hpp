#ifndef QSI_MATRIX_HPP
#define QSI_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <qsi/prime_field.hpp>
#include <qsi/rational.hpp>

namespace qsi {

// Dense matrix over an exact field F (Rational or Fp). All entries of one
// matrix live in the same field instance; the prototype element supplies
// the field for types like Fp that carry a modulus.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, F proto = F())
        : rows_(rows), cols_(cols), zero_(make_zero(proto)),
          data_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, F proto = F()) {
        Matrix m(n, n, proto);
        F one = m.zero_ + unit(proto);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& zero() const { return zero_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    Matrix scaled(const F& s) const {
        Matrix c = *this;
        for (auto& x : c.data_) x *= s;
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_) if (!is_zero(x)) return false;
        return true;
    }

    Matrix pow(std::size_t n) const {
        if (rows_ != cols_) throw std::invalid_argument("pow: square only");
        Matrix r = identity(rows_, zero_);
        Matrix base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

private:
    static F make_zero(const F& proto) { return proto - proto; }
    static F unit(const F& proto);

    std::size_t rows_ = 0, cols_ = 0;
    F zero_{};
    std::vector<F> data_;
};

template <>
inline Rational Matrix<Rational>::unit(const Rational&) { return Rational(1); }
template <>
inline Fp Matrix<Fp>::unit(const Fp& proto) { return Fp(1, proto.modulus()); }

template <class F>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<F>> kernel_basis; // each of length cols
};

namespace detail {

// Fraction-free (Bareiss) forward elimination. Returns the echelon matrix
// together with the pivot column of each of the first `rank` rows.
template <class F>
std::pair<Matrix<F>, std::vector<std::size_t>> bareiss_echelon(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    F prev = m.zero() + Matrix<F>::identity(1, m.zero())(0, 0); // one
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(row, j), m(piv, j));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev;
            m(i, col) = m.zero();
        }
        prev = m(row, col);
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace detail

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return detail::bareiss_echelon(m).second.size();
}

// Exact rank and a basis of the right kernel. rank + |kernel| = cols.
template <class F>
RankKernel<F> rank_kernel(const Matrix<F>& m) {
    auto [ech, pivots] = detail::bareiss_echelon(m);
    RankKernel<F> out;
    out.rank = pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    F one = Matrix<F>::identity(1, m.zero())(0, 0);

    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(m.cols(), ech.zero());
        v[free_col] = one;
        // back substitution over the pivot rows
        for (std::size_t r = pivots.size(); r-- > 0;) {
            F s = ech.zero();
            for (std::size_t j = pivots[r] + 1; j < m.cols(); ++j)
                s += ech(r, j) * v[j];
            v[pivots[r]] = -(s / ech(r, pivots[r]));
        }
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

// Gauss-Jordan inverse; throws if singular.
template <class F>
Matrix<F> inverse(Matrix<F> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square only");
    std::size_t n = a.rows();
    Matrix<F> inv = Matrix<F>::identity(n, a.zero());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a(piv, col))) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        F d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(a(i, col))) continue;
            F f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class F>
bool is_invertible(const Matrix<F>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

} // namespace qsi

#endif
