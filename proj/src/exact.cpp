#include "heartbox/exact.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heartbox {

namespace {

// Rows below this count are not worth forking threads for.
constexpr int kParallelRowThreshold = 64;

int mpq_entry_size(const mpq_class& v) {
    return static_cast<int>(mpz_size(v.get_num_mpz_t()) + mpz_size(v.get_den_mpz_t()));
}

// ---- GF(p) elimination ----------------------------------------------------

struct FpElim {
    Barrett br;
    int rows, cols;
    std::vector<std::uint64_t>& a;

    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }

    int find_pivot(int row_from, int col) {
        for (int i = row_from; i < rows; ++i)
            if (at(i, col) != 0) return i;
        return -1;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
    }

    void scale_row(int i, std::uint64_t c, int from_col) {
        for (int k = from_col; k < cols; ++k) at(i, k) = br.mul(at(i, k), c);
    }

    void eliminate_col(int pivot_row, int col, bool parallel) {
        const std::uint64_t* pr = &at(pivot_row, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows >= kParallelRowThreshold)
#endif
        for (int i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            std::uint64_t f = at(i, col);
            if (f == 0) continue;
            std::uint64_t fneg = br.neg(f);
            std::uint64_t* ri = &at(i, 0);
            for (int k = col; k < cols; ++k) {
                if (pr[k] != 0) ri[k] = br.add(ri[k], br.mul(fneg, pr[k]));
            }
        }
    }
};

// ---- Q elimination ---------------------------------------------------------

struct QElim {
    int rows, cols;
    std::vector<mpq_class>& a;

    mpq_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }

    // Smallest-entry pivot keeps fractions from ballooning.
    int find_pivot(int row_from, int col) {
        int best = -1, best_size = 0;
        for (int i = row_from; i < rows; ++i) {
            if (sgn(at(i, col)) == 0) continue;
            int sz = mpq_entry_size(at(i, col));
            if (best < 0 || sz < best_size) { best = i; best_size = sz; }
        }
        return best;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < cols; ++k) mpq_swap(at(i, k).get_mpq_t(), at(j, k).get_mpq_t());
    }

    void scale_row(int i, const mpq_class& c, int from_col) {
        for (int k = from_col; k < cols; ++k)
            if (sgn(at(i, k)) != 0) at(i, k) *= c;
    }

    void eliminate_col(int pivot_row, int col, bool parallel) {
        const mpq_class* pr = &at(pivot_row, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows >= kParallelRowThreshold)
#endif
        for (int i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            if (sgn(at(i, col)) == 0) continue;
            mpq_class f = at(i, col);
            mpq_t t;
            mpq_init(t);
            mpq_class* ri = &at(i, 0);
            for (int k = col; k < cols; ++k) {
                if (sgn(pr[k]) == 0) continue;
                mpq_mul(t, f.get_mpq_t(), pr[k].get_mpq_t());
                mpq_sub(ri[k].get_mpq_t(), ri[k].get_mpq_t(), t);
            }
            mpq_clear(t);
        }
    }
};

} // namespace

Matrix::Matrix(FieldSpec fs, int rows, int cols) : fs_(fs), rows_(rows), cols_(cols) {
    check(rows >= 0 && cols >= 0, Errc::BadInput, "negative matrix dimension");
    if (fs_.is_fp())
        fp_.assign(static_cast<std::size_t>(rows) * cols, 0);
    else
        q_.assign(static_cast<std::size_t>(rows) * cols, mpq_class(0));
}

Matrix Matrix::identity(FieldSpec fs, int n) {
    Matrix m(fs, n, n);
    for (int i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_int_rows(FieldSpec fs, const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(fs, r, c);
    for (int i = 0; i < r; ++i) {
        check(static_cast<int>(rows[i].size()) == c, Errc::BadInput, "ragged row list");
        for (int j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::col_vector(const std::vector<Scalar>& entries) {
    check(!entries.empty(), Errc::BadInput, "empty column vector");
    Matrix m(entries[0].field(), static_cast<int>(entries.size()), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(static_cast<int>(i), 0, entries[i]);
    return m;
}

Scalar Matrix::at(int i, int j) const {
    if (fs_.is_fp()) return Scalar(fs_, fp_[idx(i, j)]);
    return Scalar(fs_, q_[idx(i, j)]);
}

void Matrix::set(int i, int j, const Scalar& v) {
    check(v.field() == fs_, Errc::FieldMismatch, "entry field differs from matrix field");
    if (fs_.is_fp())
        fp_[idx(i, j)] = v.fp();
    else
        q_[idx(i, j)] = v.q();
}

void Matrix::set_int(int i, int j, long long v) { set(i, j, Scalar::from_int(fs_, v)); }

bool Matrix::is_zero() const {
    if (fs_.is_fp()) {
        for (auto v : fp_)
            if (v != 0) return false;
    } else {
        for (const auto& v : q_)
            if (sgn(v) != 0) return false;
    }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!(fs_ == o.fs_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return fs_.is_fp() ? fp_ == o.fp_ : q_ == o.q_;
}

void Matrix::check_same_field(const Matrix& o) const {
    check(fs_ == o.fs_, Errc::FieldMismatch,
          "matrix fields differ: " + fs_.to_string() + " vs " + o.fs_.to_string());
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(o);
    check(rows_ == o.rows_ && cols_ == o.cols_, Errc::BadInput, "shape mismatch in add");
    Matrix r(fs_, rows_, cols_);
    if (fs_.is_fp()) {
        Barrett br(fs_.p);
        for (std::size_t k = 0; k < fp_.size(); ++k) r.fp_[k] = br.add(fp_[k], o.fp_[k]);
    } else {
        for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = q_[k] + o.q_[k];
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(o);
    check(rows_ == o.rows_ && cols_ == o.cols_, Errc::BadInput, "shape mismatch in sub");
    Matrix r(fs_, rows_, cols_);
    if (fs_.is_fp()) {
        Barrett br(fs_.p);
        for (std::size_t k = 0; k < fp_.size(); ++k) r.fp_[k] = br.sub(fp_[k], o.fp_[k]);
    } else {
        for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = q_[k] - o.q_[k];
    }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(fs_, rows_, cols_);
    if (fs_.is_fp()) {
        Barrett br(fs_.p);
        for (std::size_t k = 0; k < fp_.size(); ++k) r.fp_[k] = br.neg(fp_[k]);
    } else {
        for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = -q_[k];
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    check(c.field() == fs_, Errc::FieldMismatch, "scalar field differs");
    Matrix r(fs_, rows_, cols_);
    if (fs_.is_fp()) {
        Barrett br(fs_.p);
        for (std::size_t k = 0; k < fp_.size(); ++k) r.fp_[k] = br.mul(fp_[k], c.fp());
    } else {
        for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] = q_[k] * c.q();
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(o);
    check(cols_ == o.rows_, Errc::BadInput, "shape mismatch in mul");
    Matrix r(fs_, rows_, o.cols_);
    const int m = rows_, n = o.cols_, kk = cols_;
    if (fs_.is_fp()) {
        Barrett br(fs_.p);
        // Chunked 128-bit accumulation: p < 2^61, so up to 63 products of
        // residues fit before a reduction is needed.
        constexpr int kChunk = 48;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (m >= kParallelRowThreshold)
#endif
        for (int i = 0; i < m; ++i) {
            const std::uint64_t* ai = &fp_[static_cast<std::size_t>(i) * kk];
            for (int j = 0; j < n; ++j) {
                unsigned __int128 acc = 0;
                std::uint64_t red = 0;
                int c = 0;
                for (int k2 = 0; k2 < kk; ++k2) {
                    acc += static_cast<unsigned __int128>(ai[k2]) * o.fp_[static_cast<std::size_t>(k2) * n + j];
                    if (++c == kChunk) {
                        red = br.add(red, br.reduce(acc));
                        acc = 0;
                        c = 0;
                    }
                }
                r.fp_[static_cast<std::size_t>(i) * n + j] = br.add(red, br.reduce(acc));
            }
        }
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (m >= kParallelRowThreshold)
#endif
        for (int i = 0; i < m; ++i) {
            mpq_t t;
            mpq_init(t);
            for (int j = 0; j < n; ++j) {
                mpq_class acc(0);
                for (int k2 = 0; k2 < kk; ++k2) {
                    const mpq_class& a = q_[static_cast<std::size_t>(i) * kk + k2];
                    const mpq_class& b = o.q_[static_cast<std::size_t>(k2) * n + j];
                    if (sgn(a) == 0 || sgn(b) == 0) continue;
                    mpq_mul(t, a.get_mpq_t(), b.get_mpq_t());
                    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t);
                }
                r.q_[static_cast<std::size_t>(i) * n + j] = acc;
            }
            mpq_clear(t);
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(fs_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (fs_.is_fp())
                r.fp_[static_cast<std::size_t>(j) * rows_ + i] = fp_[idx(i, j)];
            else
                r.q_[static_cast<std::size_t>(j) * rows_ + i] = q_[idx(i, j)];
        }
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

namespace {

RrefResult rref_impl(const Matrix& m, bool parallel) {
    Matrix work = m;
    RrefResult out;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    if (m.field().is_fp()) {
        FpElim el{Barrett(m.field().p), rows, cols, work.fp_data()};
        for (int col = 0; col < cols && r < rows; ++col) {
            int pr = el.find_pivot(r, col);
            if (pr < 0) continue;
            el.swap_rows(r, pr);
            el.scale_row(r, el.br.inv(el.at(r, col)), col);
            el.eliminate_col(r, col, parallel);
            out.pivot_cols.push_back(col);
            ++r;
        }
    } else {
        QElim el{rows, cols, work.q_data()};
        for (int col = 0; col < cols && r < rows; ++col) {
            int pr = el.find_pivot(r, col);
            if (pr < 0) continue;
            el.swap_rows(r, pr);
            el.scale_row(r, 1 / mpq_class(el.at(r, col)), col);
            el.eliminate_col(r, col, parallel);
            out.pivot_cols.push_back(col);
            ++r;
        }
    }
    out.reduced = std::move(work);
    out.rank = r;
    return out;
}

} // namespace

RrefResult rref_serial(const Matrix& m) { return rref_impl(m, false); }
RrefResult rref_parallel(const Matrix& m) { return rref_impl(m, true); }
RrefResult rref(const Matrix& m) { return rref_impl(m, m.rows() >= kParallelRowThreshold); }

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(m.field(), n, static_cast<int>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        basis.set_int(fc, static_cast<int>(j), 1);
        for (int t = 0; t < rr.rank; ++t) {
            Scalar v = rr.reduced.at(t, fc);
            if (!v.is_zero()) basis.set(rr.pivot_cols[t], static_cast<int>(j), -v);
        }
    }
    return basis;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    check(a.field() == b.field(), Errc::FieldMismatch, "kronecker over different fields");
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            Scalar av = a.at(i, k);
            if (av.is_zero()) continue;
            for (int j = 0; j < b.rows(); ++j)
                for (int l = 0; l < b.cols(); ++l) {
                    Scalar bv = b.at(j, l);
                    if (bv.is_zero()) continue;
                    r.set(i * b.rows() + j, k * b.cols() + l, av * bv);
                }
        }
    return r;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    check(a.rows() == b.rows(), Errc::BadInput, "solve: row mismatch");
    RrefResult rr = rref(hstack(a, b));
    for (int c : rr.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (int t = 0; t < rr.rank; ++t)
        for (int j = 0; j < b.cols(); ++j)
            x.set(rr.pivot_cols[t], j, rr.reduced.at(t, a.cols() + j));
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    check(a.rows() == a.cols(), Errc::BadInput, "inverse of non-square matrix");
    auto x = solve(a, Matrix::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    check(a.field() == b.field(), Errc::FieldMismatch, "hstack across fields");
    check(a.rows() == b.rows(), Errc::BadInput, "hstack: row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    set_block(r, 0, 0, a);
    set_block(r, 0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    check(a.field() == b.field(), Errc::FieldMismatch, "vstack across fields");
    check(a.cols() == b.cols(), Errc::BadInput, "vstack: col mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    set_block(r, 0, 0, a);
    set_block(r, a.rows(), 0, b);
    return r;
}

Matrix submatrix(const Matrix& m, int r0, int r1, int c0, int c1) {
    check(0 <= r0 && r0 <= r1 && r1 <= m.rows() && 0 <= c0 && c0 <= c1 && c1 <= m.cols(),
          Errc::BadInput, "submatrix bounds");
    Matrix r(m.field(), r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) r.set(i - r0, j - c0, m.at(i, j));
    return r;
}

Matrix columns(const Matrix& m, const std::vector<int>& which) {
    Matrix r(m.field(), m.rows(), static_cast<int>(which.size()));
    for (std::size_t j = 0; j < which.size(); ++j)
        for (int i = 0; i < m.rows(); ++i) r.set(i, static_cast<int>(j), m.at(i, which[j]));
    return r;
}

void set_block(Matrix& m, int r0, int c0, const Matrix& block) {
    check(r0 + block.rows() <= m.rows() && c0 + block.cols() <= m.cols(), Errc::BadInput,
          "set_block bounds");
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) m.set(r0 + i, c0 + j, block.at(i, j));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    set_block(r, 0, 0, a);
    set_block(r, a.rows(), a.cols(), b);
    return r;
}

Matrix column_space_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    return columns(m, rr.pivot_cols);
}

bool in_column_space(const Matrix& u, const Matrix& v) {
    check(u.rows() == v.rows(), Errc::BadInput, "ambient dimension mismatch");
    return rank(u) == rank(hstack(u, v));
}

Matrix span_canonical(const Matrix& m) {
    RrefResult rr = rref(m.transpose());
    return submatrix(rr.reduced, 0, rr.rank, 0, rr.reduced.cols()).transpose();
}

Matrix complement_basis(const Matrix& u, int ambient_dim) {
    check(u.rows() == ambient_dim || u.cols() == 0, Errc::BadInput, "bad subspace ambient");
    Matrix probe = u.cols() == 0 ? Matrix::identity(u.field(), ambient_dim)
                                 : hstack(u, Matrix::identity(u.field(), ambient_dim));
    RrefResult rr = rref(probe);
    std::vector<int> take;
    int off = u.cols();
    for (int c : rr.pivot_cols)
        if (c >= off) take.push_back(c - off);
    Matrix r(u.field(), ambient_dim, static_cast<int>(take.size()));
    for (std::size_t j = 0; j < take.size(); ++j) r.set_int(take[j], static_cast<int>(j), 1);
    return r;
}

Matrix span_intersection(const Matrix& a, const Matrix& b) {
    check(a.rows() == b.rows(), Errc::BadInput, "ambient dimension mismatch");
    if (a.cols() == 0 || b.cols() == 0) return Matrix(a.field(), a.rows(), 0);
    Matrix k = kernel_basis(hstack(a, b));
    Matrix xs = submatrix(k, 0, a.cols(), 0, k.cols());
    return column_space_basis(a * xs);
}

} // namespace heartbox
