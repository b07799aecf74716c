#include "pio/matrix.hpp"

#include "pio/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace pio {

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionMismatch("ragged initializer: row of length " +
                                    std::to_string(row.size()) + " in a " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_) + " matrix");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& x) { return x == 0; });
}

std::string Mat::shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j == 0 ? "" : " ") << format_rational(m(i, j));
        os << "]" << (i + 1 == m.rows() ? "" : "\n");
    }
    return os << "]";
}

Mat transpose(const Mat& m) {
    Mat t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Mat operator-(const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = -m(i, j);
    return out;
}

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(op) + ": shapes " + a.shape_str() + " and " +
                                b.shape_str() + " differ");
}

} // namespace

Mat operator+(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "add");
    Mat out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "subtract");
    return a + (-b);
}

Mat operator*(const Rational& s, const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
    return out;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack: row counts differ (" + a.shape_str() + " vs " +
                                b.shape_str() + ")");
    Mat out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack: column counts differ (" + a.shape_str() + " vs " +
                                b.shape_str() + ")");
    Mat out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: inner dimensions differ (" + a.shape_str() + " vs " +
                                b.shape_str() + ")");
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

Mat block(const std::vector<std::vector<Mat>>& grid) {
    if (grid.empty()) return Mat();
    const std::size_t gcols = grid.front().size();
    for (const auto& row : grid)
        if (row.size() != gcols)
            throw DimensionMismatch("block: grid rows have " + std::to_string(gcols) + " and " +
                                    std::to_string(row.size()) + " cells");
    if (gcols == 0) return Mat();

    Mat out;
    for (const auto& row : grid) {
        Mat strip = row.front();
        for (std::size_t j = 1; j < gcols; ++j) strip = hstack(strip, row[j]);
        out = (out.rows() == 0 && out.cols() == 0) ? strip : vstack(out, strip);
    }
    return out;
}

Mat pow(const Mat& m, std::size_t e) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("pow: matrix is not square (" + m.shape_str() + ")");
    Mat out = Mat::identity(m.rows());
    for (std::size_t i = 0; i < e; ++i) out = matmul(out, m);
    return out;
}

std::size_t rank(const Mat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;

    // Clear denominators row by row; row scaling changes neither rank nor
    // kernel, and leaves an integer matrix for the Bareiss recurrence.
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < nc; ++j) scale = lcm(scale, denominator(m(i, j)));
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = numerator(m(i, j)) * (scale / denominator(m(i, j)));
    }

    Int prev = 1;
    std::size_t r = 0;
    const std::size_t steps = std::min(nr, nc);
    for (std::size_t k = 0; k < steps; ++k) {
        // Full pivoting on the largest remaining magnitude keeps the exact
        // divisions small; any nonzero pivot would be correct.
        std::size_t pi = k, pj = k;
        Int best = 0;
        for (std::size_t i = k; i < nr; ++i)
            for (std::size_t j = k; j < nc; ++j)
                if (abs(a[i][j]) > best) {
                    best = abs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        if (pi != k) std::swap(a[pi], a[k]);
        if (pj != k)
            for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][pj], a[i][k]);

        for (std::size_t i = k + 1; i < nr; ++i) {
            for (std::size_t j = k + 1; j < nc; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev; // exact by Bareiss
            a[i][k] = 0;
        }
        prev = a[k][k];
        ++r;
    }
    return r;
}

Mat rref(const Mat& m) {
    Mat a = m;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = a.rows();
        for (std::size_t i = lead; i < a.rows(); ++i)
            if (a(i, col) != 0 && (piv == a.rows() || abs(a(i, col)) > abs(a(piv, col)))) piv = i;
        if (piv == a.rows()) continue;

        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead, j));
        const Rational inv = Rational(1) / a(lead, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(lead, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(lead, j);
        }
        ++lead;
    }
    return a;
}

Mat kernel_basis(const Mat& m) {
    const std::size_t n = m.cols();
    const Mat r = rref(m);

    std::vector<std::size_t> pivot_row_of_col(n, m.rows());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r(i, j) != 0) {
                pivot_row_of_col[j] = i;
                is_pivot[j] = true;
                break;
            }

    std::size_t nfree = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) ++nfree;

    Mat basis(n, nfree);
    std::size_t t = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(f, t) = 1;
        for (std::size_t j = 0; j < f; ++j)
            if (is_pivot[j]) basis(j, t) = -r(pivot_row_of_col[j], f);
        ++t;
    }
    return basis;
}

Mat column_vector(const std::vector<Rational>& v) {
    Mat m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

std::vector<Rational> column(const Mat& m, std::size_t j) {
    std::vector<Rational> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

} // namespace pio
