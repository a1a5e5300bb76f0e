#pragma once

#include "heartbox/heart.hpp"

namespace heartbox {

// Self-injectivity: the left regular module is isomorphic to the dual of the
// right regular module.
bool is_frobenius(const AlgebraPtr& a);

// Hom_R(M, R) rebased over the same algebra; commutative algebras only.
ModulePtr star_same(const ModulePtr& m);

// d_A on the projective generators of H_A over a commutative Frobenius
// algebra: d_A P_M = [Ker d' -> P'^{-1} -> P'^0] built from a minimal
// presentation of M*.
BoundedComplex duality_dA_P(const ModulePtr& m);
// Contravariant: a map g: L -> M induces d_A P_M -> d_A P_L.
ChainMap duality_dA_map(const ModuleMap& g);

// d_A on a heart object of H_A: Ker(d_A P_{V^0} -> d_A P_{V^{-1}}).
BoundedComplex duality_dA(const BoundedComplex& v);

// d_C = pi_C . d_A . tau^{>=0}_A; requires DC = C.
HeartObject duality_dC(const BoundedComplex& v, const SubcatDescriptor& c);

// Contravariant duality on a bounded complex of modules: termwise d_A P,
// twisted totalization with homotopy corrections, minimized.
BoundedComplex duality_dR_complex(const BoundedComplex& y);

} // namespace heartbox
