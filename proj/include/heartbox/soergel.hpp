#pragma once

#include <map>

#include "heartbox/coxeter.hpp"
#include "heartbox/heart.hpp"

namespace heartbox {

// Coinvariant algebra S(h)/(S(h)^W_+), graded with top degree = number of
// positive roots, dim = |W|; carries the reflection actions and the data
// making R free of rank 2 over each invariant subring R^s.
struct CoinvariantAlgebra {
    CoxeterDatum datum;
    AlgebraPtr algebra;
    std::vector<std::vector<int>> monomial_exponents;
    std::vector<int> monomial_degrees;
    std::vector<int> graded_dims;
    std::vector<Matrix> refl_action; // per simple reflection, dim x dim
    std::vector<Matrix> alpha;       // alpha_s coordinates, dim x 1
    std::vector<Matrix> invariants;  // R^s basis columns
    std::vector<Matrix> apart;       // r = a + b alpha_s: a-part per basis element
    std::vector<Matrix> bpart;       //                    b-part per basis element
    ModulePtr trivial;               // k with alpha_s acting by 0
    ModulePtr regular;

    int dim() const { return algebra->dim(); }
};

CoinvariantAlgebra make_coinvariant(const CoxeterDatum& w);

// B_s tensor: T_s(M) = R (x)_{R^s} M on the layers (1 (x) M, alpha (x) M).
ModulePtr tensor_Bs(const CoinvariantAlgebra& R, const ModulePtr& m, int s);
// Functoriality on maps: diag(f, f) between the layered modules.
ModuleMap tensor_Bs_map(const CoinvariantAlgebra& R, const ModuleMap& f, int s);
// The unit-times-c_s map m -> T_s(M), m |-> (alpha m + alpha (x) m)/2.
ModuleMap eta_Bs(const CoinvariantAlgebra& R, const ModulePtr& m, int s);

// Iterated tensor_Bs applied to the trivial module, rightmost letter first.
ModulePtr bott_samelson(const CoinvariantAlgebra& R, const std::vector<int>& word);

struct SoergelCatalog {
    CoinvariantAlgebra R;
    std::vector<ModulePtr> modules; // indexed by Weyl group element
};

// Word-length induction: B_x is the unique new summand of the Bott-Samelson
// module of a reduced word for x. Kazhdan-Lusztig multiplicities are outputs.
SoergelCatalog build_soergel_catalog(const CoinvariantAlgebra& R);

// Multiset of Soergel summands of BS(word), as element index -> multiplicity.
std::map<int, int> decompose_soergel(const SoergelCatalog& cat, const std::vector<int>& word);

// Dual Rouquier complex K_word (x) k, built as iterated cones of eta maps.
BoundedComplex rouquier_complex(const CoinvariantAlgebra& R, const std::vector<int>& word);

// Degree -1 term of K_word is the sum of the delete-one-letter Bott-Samelson
// modules, degree 0 is BS(word); checked after tau^{>=0}.
bool tau_geq0_shape_check(const CoinvariantAlgebra& R, const std::vector<int>& word);

// dim Ext^i(M_word, M_e) via the cohomology of Hom_R(K_word, k).
int verma_ext(const CoinvariantAlgebra& R, const std::vector<int>& word, int i);
std::vector<int> verma_ext_table(const CoinvariantAlgebra& R, const std::vector<int>& word,
                                 int max_i);

// The subcategory add(Soergel catalog).
SubcatDescriptor soergel_subcat(const SoergelCatalog& cat);

// R sigma k = d_R . iota . d_B (k), minimized.
BoundedComplex r_sigma_trivial(const SoergelCatalog& cat);

} // namespace heartbox
