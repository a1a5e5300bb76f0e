#pragma once

#include "heartbox/complex.hpp"

namespace heartbox {

// Additive subcategory descriptor: everything (ALL) or add of a finite list
// of pairwise non-isomorphic indecomposables (ADD).
struct SubcatDescriptor {
    enum class Mode { ALL, ADD };

    Mode mode = Mode::ALL;
    AlgebraPtr algebra;
    std::vector<ModulePtr> generators;                    // ADD mode
    std::optional<std::vector<ModulePtr>> indec_catalog;  // complete list when known
    int godement_depth = 0;                               // 0 = dim(algebra) + 2

    static SubcatDescriptor all(const AlgebraPtr& a,
                                std::optional<std::vector<ModulePtr>> catalog = std::nullopt);
    static SubcatDescriptor add(const AlgebraPtr& a, std::vector<ModulePtr> gens,
                                std::optional<std::vector<ModulePtr>> catalog = std::nullopt,
                                bool validate = true);

    int depth() const { return godement_depth > 0 ? godement_depth : algebra->dim() + 2; }
    // Generators in ADD mode, the catalog in ALL mode (CatalogRequired if absent).
    const std::vector<ModulePtr>& test_objects() const;
    bool is_all() const { return mode == Mode::ALL; }
};

// Membership of a module in add(generators); ALL accepts everything.
bool in_subcat(const ModulePtr& m, const SubcatDescriptor& c);

// A heart object: complex with terms in C, top degree <= 0, H^{<0} = 0, and
// (when test objects are available) right-orthogonality against C[i], i > 0.
struct HeartObject {
    BoundedComplex cx;
    bool certified = false;
};

HeartObject certify_heart(const BoundedComplex& cx, const SubcatDescriptor& c,
                          bool check_orthogonality = true);

// ---- covers and approximations -------------------------------------------------

// Minimal C-cover of a module (identity in ALL mode).
ModuleMap c_cover(const ModulePtr& m, const SubcatDescriptor& c);

struct Approximation {
    BoundedComplex complex; // the approximating complex with terms in C
    ChainMap to_x;          // quasi-isomorphism onto the input
};

// Godement construction; depth bounds how far below the input window the
// recursion may run before DepthExceeded.
Approximation c_approximation(const BoundedComplex& x, const SubcatDescriptor& c,
                              std::optional<int> depth = std::nullopt);

// Lift of g: W -> Z through a C-approximation phi: Z_C -> Z, W in T_C; the
// lift is unique up to homotopy.
ChainMap lift_through_approximation(const ChainMap& g, const Approximation& approx_z);

// pi_C on objects (approximate, minimize) and on morphisms.
struct PiCResult {
    HeartObject object;
    Approximation approx; // onto the input complex (pre-minimization)
    Minimized mini;
};
PiCResult pi_C(const BoundedComplex& v, const SubcatDescriptor& c);

// ---- truncations -----------------------------------------------------------------

// tau^{<=0}_A: replace degree 0 by Ker(X^0 -> X^1), drop positive degrees;
// the chain map embeds it back into x.
ChainMap truncate_leq0_A(const BoundedComplex& x);
// tau^{>=0}_A: [Ker d^{-1} (deg -2) -> X^{-1} -> X^0 -> ...]; chain map from x.
ChainMap truncate_geq0_A(const BoundedComplex& x);

struct TruncationResult {
    HeartObject object;
    // For <=0: object -> x (after un-minimizing); for >=0: not materialized.
};
HeartObject truncate_leq0(const BoundedComplex& x, const SubcatDescriptor& c);
HeartObject truncate_geq0(const BoundedComplex& x, const SubcatDescriptor& c);

// ---- heart arithmetic --------------------------------------------------------------

HeartObject heart_ker(const ChainMap& f, const SubcatDescriptor& c);
HeartObject heart_coker(const ChainMap& f, const SubcatDescriptor& c);
HeartObject heart_image(const ChainMap& f, const SubcatDescriptor& c);

bool is_zero_heart(const BoundedComplex& v);
bool is_surjective_heart(const ChainMap& f);

// ---- simples and Serre functor -------------------------------------------------------

// S_A P_m: for non-projective summands [DTr N -> I^0 -> I^1], for projective
// ones P_{D(N*)}.
BoundedComplex serre_A(const ModulePtr& m);
// S_C P_m = pi_C(S_A P_m), minimized.
HeartObject serre_P(const ModulePtr& m, const SubcatDescriptor& c);

// Unique simple quotient of P_m via the minimal-tau image construction.
HeartObject simple_quotient_L(const ModulePtr& m, const SubcatDescriptor& c);

// Yoneda criterion (*): exactness of Hom(V, C^{-n}) -> ... -> J(V, X) -> 0
// for every test object V.
bool is_simple(const BoundedComplex& v, const SubcatDescriptor& c);

// dim Hom(P_m, v) and dim Hom(v, S_C P_m); Serre duality says they agree.
std::pair<int, int> verify_serre_duality(const ModulePtr& m, const BoundedComplex& v,
                                         const SubcatDescriptor& c);

// dim Hom_{H_A}(W, S_A P_cgen) = dim Hom_{H_C}(pi_C W, S_C P_cgen) on samples.
bool verify_sigma_identity(const ModulePtr& cgen, const SubcatDescriptor& c,
                           const std::vector<BoundedComplex>& samples);

} // namespace heartbox
