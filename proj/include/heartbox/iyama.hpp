#pragma once

#include "heartbox/heart.hpp"

namespace heartbox {

// Reading of the orthogonality index range: Adjusted checks Ext^i for
// 1 <= i <= n (classical case n = 0), Strict follows the literal 1 <= i < n.
enum class IndexConvention { Adjusted, Strict };

struct OrthogonalityReport {
    int n = 0;
    IndexConvention convention = IndexConvention::Adjusted;
    bool passes = false;
    struct Witness {
        std::string x_label, y_label;
        int i = 0;
        int dim = 0;
    };
    std::vector<Witness> witnesses; // nonzero Ext between members of C
    bool contains_proj = false;
    bool contains_inj = false;
    bool functorially_finite = false;
    std::vector<ModulePtr> right_perp;
    std::vector<ModulePtr> left_perp;
    std::vector<ModulePtr> excluded; // catalog members outside both perps
};

// Verifies that C (given by its generators) is maximal n-orthogonal against a
// complete catalog of indecomposables. The Ext sweep across pairs runs in
// parallel.
OrthogonalityReport check_max_n_orthogonal(const SubcatDescriptor& c, int n,
                                           const std::vector<ModulePtr>& catalog,
                                           IndexConvention conv = IndexConvention::Adjusted);

// Window inside [-n-2, 0], terms in C, no negative cohomology.
bool heart_membership(const BoundedComplex& v, const SubcatDescriptor& c, int n);

// Prop-5.2 shape: after minimization every non-leftmost term is an injective
// module and the leftmost lies in C, inside the window [-n-2, 0].
bool injective_shape_check(const HeartObject& j, const SubcatDescriptor& c, int n);

struct HigherARSequence {
    BoundedComplex complex; // padded to [-n-2, 0]
    HigherARSequence(BoundedComplex cx) : complex(std::move(cx)) {}
    ModulePtr end_term;     // X
    ModulePtr start_term;   // X'
    int true_length = 0;    // nonzero terms
};

// The exact sequence underlying the simple quotient L_x; x indecomposable,
// non-projective, in C.
HigherARSequence higher_ar_sequence(const ModulePtr& x, const SubcatDescriptor& c, int n);

struct ARDualityCheck {
    int lhs = 0; // dim stable Hom(x, y)
    int rhs = 0; // dim Ext^{n+1}(y, X')
    ModulePtr xprime;
};
ARDualityCheck verify_ar_duality(const ModulePtr& x, const ModulePtr& y,
                                 const SubcatDescriptor& c, int n);

// X' of the higher AR sequence is DTr applied to the n-th syzygy.
bool dtr_omega_check(const ModulePtr& x, const SubcatDescriptor& c, int n);

} // namespace heartbox
