#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heartbox/algebra.hpp"

namespace heartbox {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

// Structural algebra identity: same object or same multiplication tables.
bool algebras_compatible(const AlgebraPtr& a, const AlgebraPtr& b);

// Finite-dimensional left module given by one action matrix per algebra
// basis element.
class Module {
  public:
    Module(AlgebraPtr alg, std::vector<Matrix> action, std::string label = "",
           bool check_axioms = true);

    static ModulePtr zero(const AlgebraPtr& alg);
    static ModulePtr regular(const AlgebraPtr& alg); // left regular representation
    static ModulePtr make(AlgebraPtr alg, std::vector<Matrix> action, std::string label = "",
                          bool check_axioms = true);

    const AlgebraPtr& algebra() const { return alg_; }
    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const Matrix& action(int i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const { return action_; }

    // Action of a general element given by its coordinate column.
    Matrix action_of(const Matrix& coords) const;

    ModulePtr with_label(const std::string& label) const;

  private:
    AlgebraPtr alg_;
    int dim_;
    std::vector<Matrix> action_;
    std::string label_;
};

struct ModuleMap {
    ModulePtr source;
    ModulePtr target;
    Matrix matrix; // target.dim x source.dim

    ModuleMap() = default;
    ModuleMap(ModulePtr src, ModulePtr dst, Matrix mat, bool check_intertwines = true);

    static ModuleMap identity(const ModulePtr& m);
    static ModuleMap zero(const ModulePtr& src, const ModulePtr& dst);

    bool is_zero() const { return matrix.is_zero(); }
    bool intertwines() const;
};

// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

// ---- Hom spaces -------------------------------------------------------------

// Basis of Hom_A(m, n): columns are row-major flattenings of the map
// matrices. Solved once over the algebra's generator set.
Matrix hom_space_matrix(const ModulePtr& m, const ModulePtr& n);
std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n);
int hom_dim(const ModulePtr& m, const ModulePtr& n);

Matrix map_to_vec(const Matrix& mapmat);
Matrix vec_to_map(const Matrix& vec, int rows, int cols);

// End(m) as a structure-constant algebra, with the hom basis realizing it.
struct EndAlgebra {
    AlgebraPtr algebra;
    std::vector<ModuleMap> basis;
    Matrix hom_matrix; // columns = vec of basis maps

    // Endomorphism matrix of an element given in End coordinates.
    Matrix realize(const Matrix& coords) const;
};
EndAlgebra end_algebra(const ModulePtr& m);

// ---- Subquotients -----------------------------------------------------------

struct SubmoduleResult {
    ModulePtr module;
    ModuleMap inclusion;
};
struct QuotientResult {
    ModulePtr module;
    ModuleMap projection;
};

// cols must span an action-invariant subspace; they get column-reduced.
SubmoduleResult submodule(const ModulePtr& m, const Matrix& cols, const std::string& label = "");
QuotientResult quotient_module(const ModulePtr& m, const Matrix& cols, const std::string& label = "");

SubmoduleResult kernel_of(const ModuleMap& f);
SubmoduleResult image_of(const ModuleMap& f);
QuotientResult cokernel_of(const ModuleMap& f);

struct DirectSum {
    ModulePtr module;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);

// Fiber product {(a,b) : f(a) = g(b)} of f: A -> C, g: B -> C, with its two
// projections.
struct Pullback {
    ModulePtr module;
    ModuleMap to_a;
    ModuleMap to_b;
};
Pullback pullback(const ModuleMap& f, const ModuleMap& g);

// ---- Isomorphism and decomposition -------------------------------------------

std::optional<ModuleMap> find_isomorphism(const ModulePtr& m, const ModulePtr& n,
                                          std::uint64_t seed = 0);
bool is_isomorphic(const ModulePtr& m, const ModulePtr& n, std::uint64_t seed = 0);

struct Summand {
    ModulePtr module; // representative
    int multiplicity;
    std::vector<ModuleMap> inclusions;  // one per copy
    std::vector<ModuleMap> projections; // one per copy
};
struct Decomposition {
    std::vector<Summand> summands;
    int total_count() const {
        int c = 0;
        for (const auto& s : summands) c += s.multiplicity;
        return c;
    }
};
Decomposition indecomposable_summands(const ModulePtr& m);
bool is_indecomposable(const ModulePtr& m);

// Session-level complete list of indecomposables for a representation-finite
// algebra. When present it backs a certified peeling fallback for
// decompositions whose End ring is too large for the trace criterion
// (GF(p) with p <= dim End).
void register_indecomposable_catalog(const AlgebraPtr& a, const std::vector<ModulePtr>& catalog);
std::vector<ModulePtr> registered_catalog(const AlgebraPtr& a);

// Memoized opposite algebra (session cache; structurally equal to
// opposite(a) always).
AlgebraPtr opposite_cached(const AlgebraPtr& a);
// Memoized algebra radical.
const SubspaceBasis& algebra_radical_cached(const AlgebraPtr& a);

// Subspace of Hom(m, n) of maps with every composite g*f (g: n -> m) in
// rad End(m); for m, n indecomposable this is exactly the non-isomorphisms.
// Returned as vec-columns inside hom_space_matrix coordinates' ambient space.
Matrix radical_hom_subspace(const ModulePtr& m, const ModulePtr& n);

// ---- Radical series, covers, resolutions --------------------------------------

struct RadTopSoc {
    SubmoduleResult rad;
    QuotientResult top;
    SubmoduleResult soc;
};
RadTopSoc radical_top_socle(const ModulePtr& m);

// Per-algebra catalog of indecomposable projectives/injectives and simples,
// memoized per session.
struct ProjectiveData {
    std::vector<Matrix> idempotents;
    std::vector<ModulePtr> projectives; // P_t = (regular) e_t
    std::vector<ModulePtr> tops;        // top P_t, the simples
    std::vector<ModulePtr> injectives;  // D of opposite projectives
};
const ProjectiveData& projective_data(const AlgebraPtr& a);

ModuleMap projective_cover(const ModulePtr& m);
ModuleMap injective_hull(const ModulePtr& m);
bool is_projective(const ModulePtr& m);
bool is_injective(const ModulePtr& m);

struct MinResolution {
    // terms[i] = P^{-i}; diffs[i]: P^{-i-1} -> P^{-i}; augmentation P^0 -> m.
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    ModuleMap augmentation;
};
MinResolution min_projective_resolution(const ModulePtr& m, int length);
ModulePtr syzygy(const ModulePtr& m, int n);

// ---- Duality and AR primitives ------------------------------------------------

// Vector-space dual with transposed action, a module over op_alg (checked
// structurally compatible with opposite(m->algebra())).
ModulePtr dual_D(const ModulePtr& m, const AlgebraPtr& op_alg);
ModuleMap dual_D_map(const ModuleMap& f, const AlgebraPtr& op_alg);

// M* = Hom_R(M, R) as a module over the opposite algebra.
ModulePtr star_module(const ModulePtr& m, const AlgebraPtr& op_alg);
// Contravariant star on maps: f* = (- o f): target* -> source*.
ModuleMap star_map(const ModuleMap& f, const AlgebraPtr& op_alg);

// Module map psi: src -> dst with post * psi = rhs_map, when one exists.
std::optional<ModuleMap> solve_map_with_condition(const ModulePtr& src, const ModulePtr& dst,
                                                  const Matrix& post, const Matrix& rhs_map);

// DTr via the transpose of a minimal presentation; projective summands are
// stripped first (DTr of a projective is 0).
ModulePtr transpose_dtr(const ModulePtr& m);

int ext_dim(const ModulePtr& m, const ModulePtr& n, int i);
int stable_hom_dim(const ModulePtr& m, const ModulePtr& n);

} // namespace heartbox
