#include "doctest.h"

#include "heartbox/fixtures.hpp"
#include "heartbox/iyama.hpp"

using namespace heartbox;

namespace {
const FieldSpec F7 = FieldSpec::prime(7);

SubcatDescriptor iyama_subcat(const A3Fixture& a3) {
    return SubcatDescriptor::add(a3.algebra, {a3.p1, a3.p2, a3.s3, a3.s1}, a3.catalog());
}

SubcatDescriptor full_subcat(const NakayamaFixture& nk) {
    return SubcatDescriptor::add(nk.algebra, nk.modules, nk.modules);
}
} // namespace

TEST_CASE("check_max_n_orthogonal") {
    A3Fixture a3 = make_a3_fixture(F7);
    SubcatDescriptor c = iyama_subcat(a3);

    SUBCASE("n = 0 with the full catalog passes (classical case)") {
        SubcatDescriptor full = SubcatDescriptor::add(a3.algebra, a3.catalog(), a3.catalog());
        OrthogonalityReport rep = check_max_n_orthogonal(full, 0, a3.catalog());
        CHECK(rep.passes);
        CHECK(rep.excluded.empty());
    }
    SUBCASE("the Iyama subcategory is maximal 1-orthogonal, S2 excluded") {
        OrthogonalityReport rep = check_max_n_orthogonal(c, 1, a3.catalog());
        CHECK(rep.passes);
        CHECK(rep.contains_proj);
        CHECK(rep.contains_inj);
        CHECK(rep.functorially_finite);
        REQUIRE(rep.excluded.size() == 1);
        CHECK(is_isomorphic(rep.excluded[0], a3.s2));
        CHECK(rep.witnesses.empty());
    }
    SUBCASE("n = 2 fails with Ext^2 obstructions") {
        OrthogonalityReport rep = check_max_n_orthogonal(c, 2, a3.catalog());
        CHECK(!rep.passes);
        bool found = false;
        for (const auto& w : rep.witnesses)
            if (w.i == 2 && w.dim == 1 && w.x_label == "S1" && w.y_label == "S3") found = true;
        CHECK(found);
    }
    SUBCASE("strict convention at n = 1 reduces to the vacuous range") {
        OrthogonalityReport rep =
            check_max_n_orthogonal(c, 1, a3.catalog(), IndexConvention::Strict);
        // no Ext conditions at all, so every catalog member sits in both perps
        CHECK(!rep.passes);
        CHECK(rep.right_perp.size() == a3.catalog().size());
    }
}

TEST_CASE("classical almost split sequences as 1-almost-split (n = 0)") {
    SUBCASE("dual numbers: 0 -> k -> L -> k -> 0") {
        NakayamaFixture nk = make_nakayama_fixture(F7, 2);
        SubcatDescriptor c = full_subcat(nk);
        HigherARSequence seq = higher_ar_sequence(nk.simple(), c, 0);
        CHECK(seq.true_length == 3);
        CHECK(is_isomorphic(seq.end_term, nk.simple()));
        CHECK(is_isomorphic(seq.start_term, nk.simple()));
        CHECK(is_isomorphic(seq.complex.term(-1), nk.regular()));
    }
    SUBCASE("x^3: 0 -> M2 -> M1+M3 -> M2 -> 0") {
        NakayamaFixture nk = make_nakayama_fixture(F7, 3);
        SubcatDescriptor c = full_subcat(nk);
        HigherARSequence seq = higher_ar_sequence(nk.modules[1], c, 0);
        CHECK(is_isomorphic(seq.end_term, nk.modules[1]));
        CHECK(is_isomorphic(seq.start_term, nk.modules[1]));
        CHECK(seq.complex.term(-1)->dim() == 4);
        Decomposition mid = indecomposable_summands(seq.complex.term(-1));
        CHECK(mid.total_count() == 2);
    }
}

TEST_CASE("higher AR sequence over the A3 fixture") {
    A3Fixture a3 = make_a3_fixture(F7);
    SubcatDescriptor c = iyama_subcat(a3);
    HigherARSequence seq = higher_ar_sequence(a3.s1, c, 1);
    CHECK(seq.true_length == 4);
    CHECK(seq.complex.lo() == -3);
    CHECK(is_isomorphic(seq.start_term, a3.s3));
    CHECK(is_isomorphic(seq.complex.term(-2), a3.p2));
    CHECK(is_isomorphic(seq.complex.term(-1), a3.p1));
    CHECK(is_isomorphic(seq.end_term, a3.s1));
    CHECK_THROWS_AS(higher_ar_sequence(a3.p1, c, 1), Error);
}

TEST_CASE("AR duality and the DTr-syzygy identification") {
    A3Fixture a3 = make_a3_fixture(F7);
    SubcatDescriptor c = iyama_subcat(a3);

    SUBCASE("n = 0 classical instance over the dual numbers") {
        NakayamaFixture nk = make_nakayama_fixture(F7, 2);
        SubcatDescriptor cn = full_subcat(nk);
        ARDualityCheck chk = verify_ar_duality(nk.simple(), nk.simple(), cn, 0);
        CHECK(chk.lhs == 1);
        CHECK(chk.rhs == 1);
        CHECK(dtr_omega_check(nk.simple(), cn, 0));
    }
    SUBCASE("all 16 pairs over the Iyama fixture agree") {
        for (const auto& x : c.generators)
            for (const auto& y : c.generators) {
                ARDualityCheck chk = verify_ar_duality(x, y, c, 1);
                CHECK(chk.lhs == chk.rhs);
            }
        // the only non-projective generator gives the interesting value
        ARDualityCheck s1s1 = verify_ar_duality(a3.s1, a3.s1, c, 1);
        CHECK(s1s1.lhs == 1);
        CHECK(is_isomorphic(s1s1.xprime, a3.s3));
    }
    SUBCASE("X' = DTr Omega^1 S1 = DTr S2 = S3") {
        CHECK(dtr_omega_check(a3.s1, c, 1));
    }
}

TEST_CASE("heart membership and injective shape") {
    A3Fixture a3 = make_a3_fixture(F7);
    SubcatDescriptor c = iyama_subcat(a3);

    SUBCASE("L_{S1} lies in the heart window") {
        HigherARSequence seq = higher_ar_sequence(a3.s1, c, 1);
        CHECK(heart_membership(seq.complex, c, 1));
        CHECK(heart_membership(BoundedComplex::concentrated(a3.s1, 0), c, 1));
    }
    SUBCASE("violations are caught") {
        // H^{-1} != 0: the one-term complex shifted below zero
        BoundedComplex bad = concentrated_shift(a3.s1, 1);
        CHECK(!heart_membership(bad, c, 1));
        // term outside C
        CHECK(!heart_membership(BoundedComplex::concentrated(a3.s2, 0), c, 1));
    }
    SUBCASE("S_C P_X has the injective shape for every X in C") {
        for (const auto& x : c.generators) {
            HeartObject s = serre_P(x, c);
            CHECK(injective_shape_check(s, c, 1));
        }
    }
    SUBCASE("classical n = 0: L_k fails the shape, S_A P_k passes") {
        NakayamaFixture nk = make_nakayama_fixture(F7, 2);
        SubcatDescriptor cn = full_subcat(nk);
        HeartObject lk = simple_quotient_L(nk.simple(), cn);
        CHECK(!injective_shape_check(lk, cn, 0)); // degree-0 term k is not injective
        HeartObject sk = serre_P(nk.simple(), cn);
        CHECK(injective_shape_check(sk, cn, 0));
    }
}

TEST_CASE("Lemma 5.1 style checks") {
    A3Fixture a3 = make_a3_fixture(F7);
    SubcatDescriptor c = iyama_subcat(a3);

    SUBCASE("trichotomy on the higher AR sequence: nothing splits, not null") {
        HigherARSequence seq = higher_ar_sequence(a3.s1, c, 1);
        const BoundedComplex& v = seq.complex.trimmed();
        // d^{-1} not split epi (heart object is nonzero)
        CHECK(!is_zero_heart(v));
        // leftmost map not split mono: no retraction r with r d = id
        Matrix d = v.diff(v.lo()).matrix;
        Matrix hb = hom_space_matrix(v.term(v.lo() + 1), v.term(v.lo()));
        const FieldSpec& fs = F7;
        bool split_mono = false;
        if (hb.cols() > 0) {
            Matrix lhs = kronecker(Matrix::identity(fs, v.term(v.lo())->dim()), d.transpose()) * hb;
            split_mono = solve(lhs, map_to_vec(Matrix::identity(fs, v.term(v.lo())->dim())))
                             .has_value();
        }
        CHECK(!split_mono);
        // and the identity chain map is not null-homotopic
        CHECK(!is_nullhomotopic(ChainMap::identity(v)));
    }
    SUBCASE("a split exact sequence is null-homotopic") {
        Matrix id2 = Matrix::identity(F7, 2);
        BoundedComplex split(a3.algebra, -1, {a3.p1, a3.p1}, {ModuleMap(a3.p1, a3.p1, id2)});
        CHECK(is_nullhomotopic(ChainMap::identity(split)));
        CHECK(is_zero_heart(split));
    }
    SUBCASE("C-resolutions of catalog modules terminate within n steps") {
        for (const auto& m : a3.catalog()) {
            Approximation ap =
                c_approximation(BoundedComplex::concentrated(m, 0), c, 1);
            CHECK(ap.complex.lo() >= -1);
        }
    }
}
