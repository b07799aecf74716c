#include "pio/kcf.hpp"

#include "pio/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace pio {

namespace {

// Shift matrix: ones on the superdiagonal, the size-k Jordan block at 0.
Mat shift_block(std::size_t k) {
    Mat m(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) m(i, i + 1) = 1;
    return m;
}

Mat jordan_block(const Rational& lambda, std::size_t k) {
    Mat m = shift_block(k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = lambda;
    return m;
}

Mat blkdiag(const std::vector<Mat>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const Mat& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat out(rows, cols);
    std::size_t ro = 0, co = 0;
    for (const Mat& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

Mat select_cols(const Mat& m, const std::vector<std::size_t>& cols) {
    Mat out(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, cols[j]);
    return out;
}

std::vector<Rational> matvec(const Mat& m, const std::vector<Rational>& v) {
    if (m.cols() != v.size())
        throw DimensionMismatch("matvec: " + m.shape_str() + " against vector of length " +
                                std::to_string(v.size()));
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

} // namespace

KcfSpec::KcfSpec(std::vector<std::size_t> eps, std::vector<JordanBlock> jf,
                 std::vector<std::size_t> sig, std::vector<std::size_t> eta)
    : epsilon_sizes(std::move(eps)), finite_jordan(std::move(jf)), sigma_sizes(std::move(sig)),
      eta_sizes(std::move(eta)) {
    for (const auto& b : finite_jordan)
        if (b.size < 1) throw DimensionMismatch("finite Jordan blocks must have size >= 1");
    for (std::size_t s : sigma_sizes)
        if (s < 1) throw DimensionMismatch("sigma blocks must have size >= 1");
}

std::size_t KcfSpec::epsilon_cols() const {
    std::size_t c = 0;
    for (std::size_t e : epsilon_sizes) c += e + 1;
    return c;
}

std::size_t KcfSpec::epsilon_rows() const {
    std::size_t r = 0;
    for (std::size_t e : epsilon_sizes) r += e;
    return r;
}

std::size_t KcfSpec::f_size() const {
    std::size_t s = 0;
    for (const auto& b : finite_jordan) s += b.size;
    return s;
}

std::size_t KcfSpec::sigma_size() const {
    std::size_t s = 0;
    for (std::size_t k : sigma_sizes) s += k;
    return s;
}

std::size_t KcfSpec::eta_cols() const {
    std::size_t c = 0;
    for (std::size_t e : eta_sizes) c += e;
    return c;
}

std::size_t KcfSpec::eta_rows() const {
    std::size_t r = 0;
    for (std::size_t e : eta_sizes) r += e + 1;
    return r;
}

std::size_t KcfSpec::cols() const { return epsilon_cols() + f_size() + sigma_size() + eta_cols(); }

std::size_t KcfSpec::rows() const { return epsilon_rows() + f_size() + sigma_size() + eta_rows(); }

Mat KcfSpec::sigma_matrix() const {
    std::vector<Mat> blocks;
    blocks.reserve(sigma_sizes.size());
    for (std::size_t k : sigma_sizes) blocks.push_back(shift_block(k));
    return blkdiag(blocks);
}

KcfSystem::KcfSystem(KcfSpec spec_, Mat C_, Mat L_)
    : spec(std::move(spec_)), C(std::move(C_)), L(std::move(L_)) {
    if (C.cols() != spec.cols())
        throw DimensionMismatch("C has " + std::to_string(C.cols()) +
                                " columns, block data gives n = " + std::to_string(spec.cols()));
    if (L.cols() != spec.cols())
        throw DimensionMismatch("L has " + std::to_string(L.cols()) +
                                " columns, block data gives n = " + std::to_string(spec.cols()));
}

DescriptorSystem assemble(const KcfSystem& ks) {
    const KcfSpec& s = ks.spec;
    std::vector<Mat> eblocks, ablocks;

    for (std::size_t e : s.epsilon_sizes) {
        // [I 0] and [0 I], e rows by e+1 columns
        Mat eb(e, e + 1), ab(e, e + 1);
        for (std::size_t i = 0; i < e; ++i) {
            eb(i, i) = 1;
            ab(i, i + 1) = 1;
        }
        eblocks.push_back(std::move(eb));
        ablocks.push_back(std::move(ab));
    }
    for (const auto& b : s.finite_jordan) {
        eblocks.push_back(Mat::identity(b.size));
        ablocks.push_back(jordan_block(b.eigenvalue, b.size));
    }
    for (std::size_t k : s.sigma_sizes) {
        eblocks.push_back(shift_block(k));
        ablocks.push_back(Mat::identity(k));
    }
    for (std::size_t e : s.eta_sizes) {
        // [I; 0] and [0; I], e+1 rows by e columns
        Mat eb(e + 1, e), ab(e + 1, e);
        for (std::size_t i = 0; i < e; ++i) {
            eb(i, i) = 1;
            ab(i + 1, i) = 1;
        }
        eblocks.push_back(std::move(eb));
        ablocks.push_back(std::move(ab));
    }

    return DescriptorSystem(blkdiag(eblocks), blkdiag(ablocks), ks.C, ks.L);
}

EpsilonPartition partition(const KcfSystem& ks) {
    const KcfSpec& s = ks.spec;
    EpsilonPartition part;
    part.n1 = s.epsilon_sizes.size();
    part.n2 = s.sigma_size();

    // Global column indices of the x1 pool (leading eps_i coordinates of
    // each block) and the x2 pool (trailing coordinate of each block).
    std::vector<std::size_t> x1_cols, x2_cols;
    std::size_t off = 0;
    for (std::size_t e : s.epsilon_sizes) {
        for (std::size_t i = 0; i < e; ++i) x1_cols.push_back(off + i);
        x2_cols.push_back(off + e);
        off += e + 1;
    }

    const std::size_t rows1 = s.epsilon_rows();
    std::vector<Mat> a1_blocks;
    for (std::size_t e : s.epsilon_sizes)
        if (e > 0) a1_blocks.push_back(shift_block(e));
    part.A1 = blkdiag(a1_blocks);

    part.A2 = Mat(rows1, part.n1);
    std::size_t row_off = 0;
    for (std::size_t b = 0; b < s.epsilon_sizes.size(); ++b) {
        const std::size_t e = s.epsilon_sizes[b];
        if (e > 0) part.A2(row_off + e - 1, b) = 1; // xdot_{last of x1 block} = x2
        row_off += e;
    }

    part.h1 = 0;
    for (std::size_t e : s.epsilon_sizes) part.h1 = std::max(part.h1, e);

    part.C1 = select_cols(ks.C, x1_cols);
    part.C2 = select_cols(ks.C, x2_cols);
    part.L1 = select_cols(ks.L, x1_cols);
    part.L2 = select_cols(ks.L, x2_cols);
    return part;
}

namespace {

// One side of the impulse maps. Row block k pairs delta^(k) with
//   out2 v_k + sum_i out1 A1^{j-k-1} A2 v_j  -  out_sigma J^{k+1} v,
// the last row block having no sigma contribution (J^{l+1} vanishes for
// every l >= n+1 anyway).
Mat impulse_map_side(const Mat& out1, const Mat& out2, const Mat& out_sigma,
                     const EpsilonPartition& part, const Mat& j_sigma, std::size_t l) {
    const std::size_t h = out2.rows();
    const std::size_t n1 = part.n1, n2 = part.n2;
    Mat map((l + 1) * h, (l + 1) * n1 + n2);

    // A1^i A2 (zero beyond the nilpotency index) and J^i, precomputed.
    std::vector<Mat> a1p_a2(l + 1, Mat::zero(part.A1.rows(), n1));
    Mat a1p = Mat::identity(part.A1.rows());
    for (std::size_t i = 0; i < part.h1 && i <= l; ++i) {
        a1p_a2[i] = matmul(a1p, part.A2);
        a1p = matmul(a1p, part.A1);
    }
    std::vector<Mat> jp(l + 2, Mat::identity(n2));
    for (std::size_t i = 1; i <= l + 1; ++i) jp[i] = matmul(jp[i - 1], j_sigma);

    for (std::size_t k = 0; k <= l; ++k) {
        for (std::size_t j = k; j <= l; ++j) {
            const Mat cell = (j == k) ? out2 : matmul(out1, a1p_a2[j - k - 1]);
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t c = 0; c < n1; ++c) map(k * h + i, j * n1 + c) = cell(i, c);
        }
        if (k < l) {
            const Mat cell = -matmul(out_sigma, jp[k + 1]);
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t c = 0; c < n2; ++c)
                    map(k * h + i, (l + 1) * n1 + c) = cell(i, c);
        }
    }
    return map;
}

Mat sigma_cols(const KcfSystem& ks, const Mat& out) {
    const KcfSpec& s = ks.spec;
    std::vector<std::size_t> cols(s.sigma_size());
    const std::size_t start = s.epsilon_cols() + s.f_size();
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = start + j;
    return select_cols(out, cols);
}

} // namespace

ImpulseOutputMaps impulse_output_maps(const KcfSystem& ks, std::size_t l) {
    if (l < 1) throw InvalidL("impulse_output_maps: l must be >= 1");
    const EpsilonPartition part = partition(ks);
    const Mat j_sigma = ks.spec.sigma_matrix();
    return ImpulseOutputMaps{
        impulse_map_side(part.C1, part.C2, sigma_cols(ks, ks.C), part, j_sigma, l),
        impulse_map_side(part.L1, part.L2, sigma_cols(ks, ks.L), part, j_sigma, l)};
}

bool check_kcf_pio(const KcfSystem& ks) {
    const ImpulseOutputMaps maps = impulse_output_maps(ks, ks.spec.cols() + 1);
    return rank(vstack(maps.y_map, maps.z_map)) == rank(maps.y_map);
}

ImpulseStack ImpulseStack::from_coefficients(std::vector<std::vector<Rational>> coeffs) {
    const auto nonzero = [](const std::vector<Rational>& c) {
        return std::any_of(c.begin(), c.end(), [](const Rational& x) { return x != 0; });
    };
    while (!coeffs.empty() && !nonzero(coeffs.back())) coeffs.pop_back();
    return ImpulseStack{std::move(coeffs)};
}

ImpulseStack sigma_impulse(const Mat& j_sigma, const std::vector<Rational>& x0) {
    if (j_sigma.rows() != j_sigma.cols())
        throw DimensionMismatch("sigma_impulse: matrix is not square (" + j_sigma.shape_str() +
                                ")");
    if (x0.size() != j_sigma.cols())
        throw DimensionMismatch("sigma_impulse: initial value has length " +
                                std::to_string(x0.size()) + ", matrix is " + j_sigma.shape_str());

    const std::size_t d = j_sigma.rows();
    std::size_t h2 = 0; // nilpotency index
    {
        Mat p = Mat::identity(d);
        while (h2 <= d && !p.is_zero()) {
            p = matmul(p, j_sigma);
            ++h2;
        }
        if (!p.is_zero()) throw NotNilpotent("sigma_impulse: matrix is not nilpotent");
    }

    std::vector<std::vector<Rational>> coeffs;
    Mat p = j_sigma;
    for (std::size_t i = 1; i + 1 <= h2; ++i) {
        std::vector<Rational> c = matvec(p, x0);
        for (Rational& x : c) x = -x;
        coeffs.push_back(std::move(c));
        p = matmul(p, j_sigma);
    }
    return ImpulseStack::from_coefficients(std::move(coeffs));
}

ImpulseStack epsilon_impulse(const EpsilonPartition& part,
                             const std::vector<std::vector<Rational>>& v) {
    for (const auto& vj : v)
        if (vj.size() != part.n1)
            throw DimensionMismatch("epsilon_impulse: pattern vector has length " +
                                    std::to_string(vj.size()) + ", expected " +
                                    std::to_string(part.n1));
    if (v.empty()) return ImpulseStack{};

    const std::size_t l = v.size() - 1;
    const std::size_t d = part.A1.rows();
    std::vector<std::vector<Rational>> coeffs;
    for (std::size_t k = 0; k + 1 <= l; ++k) {
        std::vector<Rational> c(d);
        Mat a1p = Mat::identity(d);
        for (std::size_t i = 0; i < part.h1 && k + i + 1 <= l; ++i) {
            const std::vector<Rational> term = matvec(matmul(a1p, part.A2), v[k + i + 1]);
            for (std::size_t t = 0; t < d; ++t) c[t] += term[t];
            a1p = matmul(a1p, part.A1);
        }
        coeffs.push_back(std::move(c));
    }
    return ImpulseStack::from_coefficients(std::move(coeffs));
}

std::pair<ImpulseStack, ImpulseStack> output_impulse(const KcfSystem& ks,
                                                     const std::vector<std::vector<Rational>>& v,
                                                     const std::vector<Rational>& v_sigma) {
    const EpsilonPartition part = partition(ks);
    const std::size_t l = v.empty() ? ks.spec.cols() + 1 : v.size() - 1;
    if (v.size() == 1) throw InvalidL("output_impulse: pattern needs at least two vectors");

    for (const auto& vj : v)
        if (vj.size() != part.n1)
            throw DimensionMismatch("output_impulse: pattern vector has length " +
                                    std::to_string(vj.size()) + ", expected " +
                                    std::to_string(part.n1));
    if (v_sigma.size() != part.n2)
        throw DimensionMismatch("output_impulse: sigma vector has length " +
                                std::to_string(v_sigma.size()) + ", expected " +
                                std::to_string(part.n2));

    std::vector<Rational> w;
    w.reserve((l + 1) * part.n1 + part.n2);
    for (std::size_t j = 0; j <= l; ++j) {
        if (j < v.size())
            w.insert(w.end(), v[j].begin(), v[j].end());
        else
            w.insert(w.end(), part.n1, Rational(0));
    }
    w.insert(w.end(), v_sigma.begin(), v_sigma.end());

    const ImpulseOutputMaps maps = impulse_output_maps(ks, l);
    const auto slice = [l](const Mat& map, const std::vector<Rational>& x) {
        const std::vector<Rational> flat = matvec(map, x);
        const std::size_t h = flat.size() / (l + 1);
        std::vector<std::vector<Rational>> coeffs(l + 1);
        for (std::size_t k = 0; k <= l; ++k)
            coeffs[k] = std::vector<Rational>(flat.begin() + k * h, flat.begin() + (k + 1) * h);
        return ImpulseStack::from_coefficients(std::move(coeffs));
    };
    return {slice(maps.y_map, w), slice(maps.z_map, w)};
}

bool oracle_pio(const KcfSystem& ks) {
    const ImpulseOutputMaps maps = impulse_output_maps(ks, ks.spec.cols() + 1);
    const Mat silent = kernel_basis(maps.y_map);
    return matmul(maps.z_map, silent).is_zero();
}

} // namespace pio
