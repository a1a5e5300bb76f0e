#pragma once

#include <map>

#include "heartbox/module.hpp"

namespace heartbox {

// Bounded cochain complex ... -> X^d -> X^{d+1} -> ... with d*d = 0; terms
// outside the window are zero.
class BoundedComplex {
  public:
    explicit BoundedComplex(AlgebraPtr alg); // zero complex
    BoundedComplex(AlgebraPtr alg, int lo, std::vector<ModulePtr> terms,
                   std::vector<ModuleMap> diffs, bool check_dd = true);

    static BoundedComplex concentrated(const ModulePtr& m, int degree);

    const AlgebraPtr& algebra() const { return alg_; }
    bool window_empty() const { return terms_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }

    ModulePtr term(int d) const;  // zero module outside the window
    ModuleMap diff(int d) const;  // X^d -> X^{d+1}, zero map out of range
    bool is_zero() const;
    int total_dim() const;

    // Drop zero modules at both window ends.
    BoundedComplex trimmed() const;
    // Grow the window with zero terms to cover [lo, hi].
    BoundedComplex padded(int lo, int hi) const;

    std::string describe() const;

  private:
    AlgebraPtr alg_;
    int lo_ = 0;
    std::vector<ModulePtr> terms_;
    std::vector<ModuleMap> diffs_; // diffs_[i] : term(lo+i) -> term(lo+i+1)
};

struct ChainMap {
    BoundedComplex source;
    BoundedComplex target;
    std::map<int, Matrix> comps; // absent degree = zero component

    ChainMap() = default;
    ChainMap(BoundedComplex src, BoundedComplex dst, std::map<int, Matrix> components,
             bool check = true);

    static ChainMap identity(const BoundedComplex& x);
    static ChainMap zero(const BoundedComplex& src, const BoundedComplex& dst);

    Matrix comp(int d) const; // materialized (zero matrix when absent)
    bool commutes() const;
    bool is_zero_map() const;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);

// Shift X[n]^d = X^{d+n}, differentials multiplied by (-1)^n.
BoundedComplex shift(const BoundedComplex& x, int n);
ChainMap shift(const ChainMap& f, int n);

BoundedComplex direct_sum_complex(const BoundedComplex& a, const BoundedComplex& b);

// Mapping cone: C^d = X^{d+1} + Y^d, differential [[-d_X, 0], [f, d_Y]].
struct ConeResult {
    BoundedComplex cone;
    ChainMap from_target;      // Y -> Cone
    ChainMap to_shifted_source; // Cone -> X[1]
};
ConeResult cone(const ChainMap& f);

// H^i as a module (subquotient of X^i).
ModulePtr cohomology(const BoundedComplex& x, int i);
bool is_acyclic(const BoundedComplex& x);

// Complex with M concentrated in degree -n (the paper's M[n]).
BoundedComplex concentrated_shift(const ModulePtr& m, int n);

// ---- chain maps modulo homotopy ------------------------------------------------

// Chain maps are parameterized degreewise by Hom-space coordinates; the
// null-homotopic subspace is spanned by dh + hd over module homotopies h.
struct HomotopyHomSpace {
    BoundedComplex source, target;
    std::vector<int> degrees;           // overlap degrees carrying components
    std::vector<Matrix> hom_bases;      // per degree: vec-columns of Hom(x^d, y^d)
    Matrix chain_solutions;             // columns: chain maps in concat hom coords
    Matrix homotopy_subspace;           // columns inside the same coords
    int chain_dim = 0;
    int homotopy_dim = 0;
    int quotient_dim = 0;
    std::vector<ChainMap> quotient_reps;

    ChainMap realize(const Matrix& coeff_col) const;
    // coordinates of a chain map in the concat hom coords
    Matrix coordinates_of(const ChainMap& f) const;
};

HomotopyHomSpace hom_homotopy(const BoundedComplex& x, const BoundedComplex& y);
int hom_homotopy_dim(const BoundedComplex& x, const BoundedComplex& y);
bool is_nullhomotopic(const ChainMap& f);
bool homotopic(const ChainMap& f, const ChainMap& g);

// Components h^d: x^d -> y^{d+shift-1} with d_y h + h d_x = f, where f is a
// degree-`shift` collection f^d: x^d -> y^{d+shift}; nullopt when no solution.
// shift = 0 extracts an ordinary null-homotopy of a chain map.
std::optional<std::map<int, Matrix>> solve_degree_homotopy(const BoundedComplex& x,
                                                           const BoundedComplex& y,
                                                           const std::map<int, Matrix>& f,
                                                           int shift);

// Invertible-in-every-degree chain map, searched like find_isomorphism.
std::optional<ChainMap> find_chain_isomorphism(const BoundedComplex& x, const BoundedComplex& y,
                                               std::uint64_t seed = 0);
// Homotopy equivalence of minimal models.
bool homotopy_equivalent(const BoundedComplex& x, const BoundedComplex& y);

// ---- tensor products (commutative algebras) --------------------------------------

struct TensorModule {
    ModulePtr module;
    Matrix proj; // (M tensor_k N) -> quotient coordinates
    Matrix sect; // section
};
TensorModule tensor_modules(const ModulePtr& m, const ModulePtr& n);

BoundedComplex tensor_complexes(const BoundedComplex& x, const BoundedComplex& y);

// ---- minimization -----------------------------------------------------------------

struct Minimized {
    BoundedComplex complex;
    ChainMap to_min;   // x -> minimized
    ChainMap from_min; // minimized -> x
};
// Gaussian cancellation of invertible differential components between
// matched indecomposable summands; homotopy equivalence witnesses returned.
Minimized minimize(const BoundedComplex& x);

} // namespace heartbox
