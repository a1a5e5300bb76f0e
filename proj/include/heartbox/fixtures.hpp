#pragma once

#include "heartbox/algebra.hpp"
#include "heartbox/module.hpp"

namespace heartbox {

// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
AlgebraPtr make_truncated_poly_algebra(const FieldSpec& fs, int n);

// k^n with coordinatewise multiplication.
AlgebraPtr make_diagonal_algebra(const FieldSpec& fs, int n);

// Path algebra of 1 -> 2 -> 3 modulo paths of length two.
// Basis e1, e2, e3, a (1->2), b (2->3); b*a = 0.
AlgebraPtr make_a3rad2_algebra(const FieldSpec& fs);

// Self-injective Nakayama algebra k[x]/(x^n) with its uniserial modules
// M_i = k[x]/(x^i); indecomposable catalog registered on construction.
struct NakayamaFixture {
    AlgebraPtr algebra;
    std::vector<ModulePtr> modules; // M_1 = k, ..., M_n = regular
    ModulePtr simple() const { return modules.front(); }
    ModulePtr regular() const { return modules.back(); }
};
NakayamaFixture make_nakayama_fixture(const FieldSpec& fs, int n);

// The A3 rad-square fixture with its five indecomposables.
struct A3Fixture {
    AlgebraPtr algebra;
    ModulePtr s1, s2, s3, p1, p2; // P3 = S3
    std::vector<ModulePtr> catalog() const { return {s1, s2, s3, p1, p2}; }
};
A3Fixture make_a3_fixture(const FieldSpec& fs);

} // namespace heartbox
