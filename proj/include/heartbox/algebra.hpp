#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heartbox/exact.hpp"

namespace heartbox {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional associative unital algebra by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k.
class Algebra {
  public:
    struct MulEntry {
        int i, j, k;
        Scalar c;
    };

    Algebra(std::string name, FieldSpec field, std::vector<std::string> basis_labels,
            std::vector<MulEntry> mul, std::vector<Scalar> unit);

    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return field_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Matrix& unit() const { return unit_; }
    const std::vector<MulEntry>& mul_entries() const { return mul_; }

    // Left multiplication matrix of basis element e_i.
    const Matrix& left_mult(int i) const { return left_[i]; }
    // Left/right multiplication by an arbitrary element (dim x 1 coordinates).
    Matrix left_mult_of(const Matrix& x) const;
    Matrix right_mult_of(const Matrix& x) const;
    Matrix multiply(const Matrix& x, const Matrix& y) const;

    Matrix basis_vector(int i) const;
    bool is_commutative() const;

    // A small set of elements (as coordinate columns) generating the algebra
    // together with the unit; cuts intertwiner systems down to generators.
    const std::vector<int>& generator_indices() const { return gens_; }

  private:
    std::string name_;
    FieldSpec field_;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<MulEntry> mul_;
    Matrix unit_;
    std::vector<Matrix> left_;
    std::vector<int> gens_;

    void compute_generators();
};

struct ValidationReport {
    bool ok = true;
    std::string message; // empty when ok
};

// Exhaustive associativity and two-sided unit law check over basis triples.
ValidationReport validate(const Algebra& a);
// Same, but throws NotAssociative / UnitLawFails.
void validate_or_throw(const Algebra& a);

AlgebraPtr opposite(const AlgebraPtr& a);

struct SubspaceBasis {
    AlgebraPtr ambient;
    Matrix columns; // independent columns spanning the subspace
    int dim() const { return columns.cols(); }
};

// Jacobson radical via Dickson's trace criterion. Requires Q, or GF(p) with
// p > dim; asserts the result is a nilpotent two-sided ideal with semisimple
// quotient.
SubspaceBasis jacobson_radical(const AlgebraPtr& a);

// Quotient by a two-sided ideal, with the projection (dim -> qdim
// coordinates) and a section picking complement representatives.
struct QuotientAlgebra {
    AlgebraPtr algebra;
    Matrix projection;
    Matrix section;
};
QuotientAlgebra quotient_by_ideal(const AlgebraPtr& a, const Matrix& ideal_cols);

// Unital subalgebra on a given subspace basis (columns must be closed under
// multiplication and contain the designated unit).
struct CornerAlgebra {
    AlgebraPtr algebra;
    Matrix basis_cols; // embedding of the corner basis into the ambient algebra
};
CornerAlgebra subalgebra_on(const AlgebraPtr& a, const Matrix& basis_cols, const Matrix& unit_coords,
                            const std::string& name);

// Complete orthogonal set of primitive idempotents summing to 1, as
// coordinate columns. Lifts idempotents of a/rad through the radical by the
// cubic Newton step e <- 3e^2 - 2e^3.
std::vector<Matrix> primitive_idempotents(const AlgebraPtr& a);

// Deterministic root search used by the splitting machinery: all roots in the
// base field of the minimal polynomial, or SplitFailure diagnostics handled
// by callers. Polynomials are coefficient columns, low degree first.
std::vector<Scalar> polynomial_roots_in_field(const std::vector<Scalar>& poly);

// Minimal polynomial of the multiplication operator of x on the algebra.
std::vector<Scalar> minimal_polynomial(const AlgebraPtr& a, const Matrix& x);

} // namespace heartbox
