#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heartbox/field.hpp"

namespace heartbox {

// Dense exact matrix over Q or GF(p). Row-major. Immutable in spirit: the
// mutating setters exist for construction; every algorithm returns fresh
// values.
class Matrix {
  public:
    Matrix() : fs_(FieldSpec::rationals()), rows_(0), cols_(0) {}
    Matrix(FieldSpec fs, int rows, int cols); // zero-filled

    static Matrix zero(FieldSpec fs, int rows, int cols) { return Matrix(fs, rows, cols); }
    static Matrix identity(FieldSpec fs, int n);
    static Matrix from_int_rows(FieldSpec fs, const std::vector<std::vector<long long>>& rows);
    static Matrix col_vector(const std::vector<Scalar>& entries);

    const FieldSpec& field() const { return fs_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& v);
    void set_int(int i, int j, long long v);

    // Raw storage, used by the kernels and serialization.
    std::vector<std::uint64_t>& fp_data() { return fp_; }
    const std::vector<std::uint64_t>& fp_data() const { return fp_; }
    std::vector<mpq_class>& q_data() { return q_; }
    const std::vector<mpq_class>& q_data() const { return q_; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    std::string to_string() const;

  private:
    FieldSpec fs_;
    int rows_, cols_;
    std::vector<std::uint64_t> fp_; // used iff Fp
    std::vector<mpq_class> q_;      // used iff Q

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
    void check_same_field(const Matrix& o) const;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form. rref() picks the parallel path for large inputs;
// the _serial and _parallel entry points are the reference pair compared by
// tests and by tools/bench_kernels.
RrefResult rref(const Matrix& m);
RrefResult rref_serial(const Matrix& m);
RrefResult rref_parallel(const Matrix& m);

int rank(const Matrix& m);

// Basis of the right null space, one column per basis vector, in the
// RREF-canonical form (free columns ascending, unit coordinate at the free
// position).
Matrix kernel_basis(const Matrix& m);

// Kronecker product, lexicographic index flattening.
Matrix kronecker(const Matrix& a, const Matrix& b);

// Particular solution of A X = B, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix submatrix(const Matrix& m, int r0, int r1, int c0, int c1);
Matrix columns(const Matrix& m, const std::vector<int>& which);
void set_block(Matrix& m, int r0, int c0, const Matrix& block);

// Block-diagonal stack of maps.
Matrix direct_sum(const Matrix& a, const Matrix& b);

// A basis of the column space, as a subset of the input columns.
Matrix column_space_basis(const Matrix& m);

// Membership of v's columns in the column space of u.
bool in_column_space(const Matrix& u, const Matrix& v);

// Canonical form of a column-span: RREF of the transpose, transposed back.
// Two matrices span the same subspace iff their canonical forms agree.
Matrix span_canonical(const Matrix& m);

// Columns of the identity completing col(u) to the full space; u must have
// independent columns.
Matrix complement_basis(const Matrix& u, int ambient_dim);

// Intersection of two column spans, as a column basis.
Matrix span_intersection(const Matrix& a, const Matrix& b);

} // namespace heartbox
