#include "heartbox/heart.hpp"

#include <algorithm>

namespace heartbox {

// ---- SubcatDescriptor ---------------------------------------------------------

SubcatDescriptor SubcatDescriptor::all(const AlgebraPtr& a,
                                       std::optional<std::vector<ModulePtr>> catalog) {
    SubcatDescriptor c;
    c.mode = Mode::ALL;
    c.algebra = a;
    c.indec_catalog = std::move(catalog);
    return c;
}

SubcatDescriptor SubcatDescriptor::add(const AlgebraPtr& a, std::vector<ModulePtr> gens,
                                       std::optional<std::vector<ModulePtr>> catalog,
                                       bool validate) {
    SubcatDescriptor c;
    c.mode = Mode::ADD;
    c.algebra = a;
    c.generators = std::move(gens);
    c.indec_catalog = std::move(catalog);
    if (validate) {
        for (const auto& g : c.generators) {
            check(algebras_compatible(g->algebra(), a), Errc::AlgebraMismatch,
                  "generator over wrong algebra");
            check(is_indecomposable(g), Errc::BadInput,
                  "subcategory generator '" + g->label() + "' is not indecomposable");
        }
        for (std::size_t i = 0; i < c.generators.size(); ++i)
            for (std::size_t j = i + 1; j < c.generators.size(); ++j)
                check(!is_isomorphic(c.generators[i], c.generators[j]), Errc::BadInput,
                      "subcategory generators '" + c.generators[i]->label() + "' and '" +
                          c.generators[j]->label() + "' are isomorphic");
    }
    return c;
}

const std::vector<ModulePtr>& SubcatDescriptor::test_objects() const {
    if (mode == Mode::ADD) return generators;
    check(indec_catalog.has_value(), Errc::CatalogRequired,
          "ALL mode needs a complete indecomposable catalog for this operation");
    return *indec_catalog;
}

bool in_subcat(const ModulePtr& m, const SubcatDescriptor& c) {
    if (c.is_all()) return true;
    if (m->dim() == 0) return true;
    Decomposition dec = indecomposable_summands(m);
    for (const auto& s : dec.summands) {
        bool found = false;
        for (const auto& g : c.generators)
            if (s.module->dim() == g->dim() && is_isomorphic(s.module, g)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

HeartObject certify_heart(const BoundedComplex& cx0, const SubcatDescriptor& c,
                          bool check_orthogonality) {
    BoundedComplex cx = cx0.trimmed();
    HeartObject out{cx, false};
    if (cx.is_zero()) {
        out.certified = true;
        return out;
    }
    if (cx.hi() > 0) return out;
    for (int d = cx.lo(); d < 0; ++d)
        if (cohomology(cx, d)->dim() != 0) return out;
    for (int d = cx.lo(); d <= cx.hi(); ++d)
        if (!in_subcat(cx.term(d), c)) return out;
    if (check_orthogonality && !c.is_all()) {
        for (const auto& v : c.generators)
            for (int i = 1; i <= -cx.lo(); ++i)
                if (hom_homotopy_dim(concentrated_shift(v, i), cx) != 0) return out;
    }
    out.certified = true;
    return out;
}

// ---- c_cover ------------------------------------------------------------------

namespace {

struct CoverCandidate {
    ModulePtr gen;
    Matrix map; // component map gen -> m
};

bool is_c_cover(const std::vector<CoverCandidate>& blocks, const ModulePtr& m,
                const SubcatDescriptor& c) {
    const FieldSpec& fs = m->algebra()->field();
    int total = 0;
    for (const auto& b : blocks) total += b.gen->dim();
    Matrix f(fs, m->dim(), total);
    int off = 0;
    for (const auto& b : blocks) {
        set_block(f, 0, off, b.map);
        off += b.gen->dim();
    }
    if (rank(f) != m->dim()) return false;
    for (const auto& v : c.generators) {
        int want = hom_dim(v, m);
        if (want == 0) continue;
        Matrix images(fs, v->dim() * m->dim(), 0);
        for (const auto& b : blocks) {
            Matrix hb = hom_space_matrix(v, b.gen);
            for (int t = 0; t < hb.cols(); ++t) {
                Matrix phi = vec_to_map(submatrix(hb, 0, hb.rows(), t, t + 1), b.gen->dim(),
                                        v->dim());
                images = hstack(images, map_to_vec(b.map * phi));
            }
        }
        if (rank(images) != want) return false;
    }
    return true;
}

} // namespace

ModuleMap c_cover(const ModulePtr& m, const SubcatDescriptor& c) {
    if (c.is_all()) return ModuleMap::identity(m);
    const FieldSpec& fs = m->algebra()->field();
    if (m->dim() == 0) return ModuleMap::zero(Module::zero(c.algebra), m);

    std::vector<CoverCandidate> blocks;
    for (const auto& g : c.generators) {
        Matrix hb = hom_space_matrix(g, m);
        for (int t = 0; t < hb.cols(); ++t)
            blocks.push_back(
                {g, vec_to_map(submatrix(hb, 0, hb.rows(), t, t + 1), m->dim(), g->dim())});
    }
    check(is_c_cover(blocks, m, c), Errc::NoCover,
          "subcategory does not cover module '" + m->label() + "'");

    // greedy pruning to a minimal cover
    for (std::size_t i = 0; i < blocks.size();) {
        std::vector<CoverCandidate> without = blocks;
        without.erase(without.begin() + static_cast<long>(i));
        if (is_c_cover(without, m, c))
            blocks = std::move(without);
        else
            ++i;
    }
    std::vector<ModulePtr> parts;
    for (const auto& b : blocks) parts.push_back(b.gen);
    DirectSum sum = direct_sum(parts);
    Matrix f(fs, m->dim(), sum.module->dim());
    int off = 0;
    for (const auto& b : blocks) {
        set_block(f, 0, off, b.map);
        off += b.gen->dim();
    }
    return ModuleMap(sum.module, m, f, false);
}

// ---- Godement approximation ------------------------------------------------------

Approximation c_approximation(const BoundedComplex& x0, const SubcatDescriptor& c,
                              std::optional<int> depth_opt) {
    BoundedComplex x = x0.trimmed();
    const FieldSpec& fs = c.algebra->field();
    if (x.window_empty() || x.is_zero())
        return {BoundedComplex(c.algebra), ChainMap(BoundedComplex(c.algebra), x0, {}, false)};

    // Lemma: pi_C X = X for X already in T_C.
    bool inside = true;
    for (int d = x.lo(); d <= x.hi() && inside; ++d)
        if (!in_subcat(x.term(d), c)) inside = false;
    if (inside) return {x, ChainMap(x, x0, ChainMap::identity(x).comps, false)};

    const int depth = depth_opt.value_or(c.depth());
    const int floor = x.lo() - depth;

    std::vector<ModulePtr> terms_rev;   // from degree hi downwards
    std::vector<ModuleMap> diffs_rev;   // d^{n}: X_C^n -> X_C^{n+1}
    std::vector<Matrix> phi_rev;        // components X_C^n -> X^n

    ModuleMap top_cover = c_cover(x.term(x.hi()), c);
    terms_rev.push_back(top_cover.source);
    phi_rev.push_back(top_cover.matrix);

    int n = x.hi();
    for (;;) {
        // current lowest built term is X_C^n with map phi^n
        ModulePtr xc_n = terms_rev.back();
        ModuleMap d_n = diffs_rev.empty()
                            ? ModuleMap::zero(xc_n, Module::zero(c.algebra))
                            : diffs_rev.back();
        SubmoduleResult ker = kernel_of(d_n);
        // F = Ker d^n x_{X^n} X^{n-1}
        ModuleMap phi_on_ker(ker.module, x.term(n),
                             phi_rev.back() * ker.inclusion.matrix, false);
        Pullback f = pullback(phi_on_ker, x.diff(n - 1));
        if (f.module->dim() == 0 && n - 1 < x.lo()) break;
        check(n - 1 >= floor, Errc::DepthExceeded,
              "Godement recursion did not terminate above degree " + std::to_string(floor) +
                  " (infinite C-dimension within this window?)");
        ModuleMap cover = c_cover(f.module, c);
        ModulePtr xc_prev = cover.source;
        // d^{n-1} = (F -> Ker) -> X_C^n after the cover
        Matrix dmat = ker.inclusion.matrix * f.to_a.matrix * cover.matrix;
        diffs_rev.push_back(ModuleMap(xc_prev, xc_n, dmat, false));
        phi_rev.push_back(f.to_b.matrix * cover.matrix);
        terms_rev.push_back(xc_prev);
        --n;
        if (xc_prev->dim() == 0 && n < x.lo()) break;
    }

    std::vector<ModulePtr> terms(terms_rev.rbegin(), terms_rev.rend());
    std::vector<ModuleMap> diffs(diffs_rev.rbegin(), diffs_rev.rend());
    int lo = x.hi() - static_cast<int>(terms.size()) + 1;
    BoundedComplex xc(c.algebra, lo, terms, diffs, true);
    std::map<int, Matrix> comps;
    for (std::size_t i = 0; i < phi_rev.size(); ++i) {
        int d = x.hi() - static_cast<int>(i);
        if (!phi_rev[i].is_zero()) comps[d] = phi_rev[i];
    }
    ChainMap to_x(xc, x0, std::move(comps), true);
    Approximation out{xc.trimmed(), ChainMap(xc.trimmed(), x0, to_x.comps, false)};
    return out;
}

ChainMap lift_through_approximation(const ChainMap& g, const Approximation& approx_z) {
    const BoundedComplex& w = g.source;
    const BoundedComplex& zc = approx_z.complex;
    const BoundedComplex& z = approx_z.to_x.target;
    const FieldSpec& fs = w.algebra()->field();

    // unknown h: chain map w -> zc; unknown e: degreewise maps w^d -> z^{d-1};
    // equations: h is a chain map, phi h - g = d e + e d.
    int hlo = std::max(w.lo(), zc.lo()), hhi = std::min(w.hi(), zc.hi());
    int elo = std::max(w.lo(), z.lo() + 1), ehi = std::min(w.hi(), z.hi() + 1);
    std::vector<Matrix> hb, eb;
    std::vector<int> hoff, eoff;
    int htotal = 0, etotal = 0;
    for (int d = hlo; d <= hhi; ++d) {
        hb.push_back(hom_space_matrix(w.term(d), zc.term(d)));
        hoff.push_back(htotal);
        htotal += hb.back().cols();
    }
    for (int d = elo; d <= ehi; ++d) {
        eb.push_back(hom_space_matrix(w.term(d), z.term(d - 1)));
        eoff.push_back(etotal);
        etotal += eb.back().cols();
    }
    int total = htotal + etotal;
    if (total == 0) {
        // nothing to solve; lift must be zero, and g must be null already
        return ChainMap(w, zc, {}, false);
    }

    Matrix sys(fs, 0, total);
    Matrix rhs(fs, 0, 1);
    // (A) chain-map equations for h
    for (int d = hlo - 1; d <= hhi; ++d) {
        int rows = zc.term(d + 1)->dim() * w.term(d)->dim();
        if (rows == 0) continue;
        Matrix row(fs, rows, total);
        bool nz = false;
        if (d + 1 >= hlo && d + 1 <= hhi && hb[d + 1 - hlo].cols() > 0) {
            Matrix blk = kronecker(Matrix::identity(fs, zc.term(d + 1)->dim()),
                                   w.diff(d).matrix.transpose()) *
                         hb[d + 1 - hlo];
            set_block(row, 0, hoff[d + 1 - hlo], blk);
            nz = nz || !blk.is_zero();
        }
        if (d >= hlo && d <= hhi && hb[d - hlo].cols() > 0) {
            Matrix blk = kronecker(zc.diff(d).matrix, Matrix::identity(fs, w.term(d)->dim())) *
                         hb[d - hlo];
            Matrix cur = submatrix(row, 0, rows, hoff[d - hlo], hoff[d - hlo] + blk.cols());
            set_block(row, 0, hoff[d - hlo], cur - blk);
            nz = nz || !blk.is_zero();
        }
        if (nz) {
            sys = vstack(sys, row);
            rhs = vstack(rhs, Matrix(fs, rows, 1));
        }
    }
    // (B) lifting equations: phi^d h^d - d_z e^d - e^{d+1} d_w = g^d
    for (int d = w.lo(); d <= w.hi(); ++d) {
        int rows = z.term(d)->dim() * w.term(d)->dim();
        if (rows == 0) continue;
        Matrix row(fs, rows, total);
        if (d >= hlo && d <= hhi && hb[d - hlo].cols() > 0) {
            Matrix blk = kronecker(approx_z.to_x.comp(d), Matrix::identity(fs, w.term(d)->dim())) *
                         hb[d - hlo];
            set_block(row, 0, hoff[d - hlo], blk);
        }
        if (d >= elo && d <= ehi && eb[d - elo].cols() > 0) {
            Matrix blk = kronecker(z.diff(d - 1).matrix, Matrix::identity(fs, w.term(d)->dim())) *
                         eb[d - elo];
            Matrix cur = submatrix(row, 0, rows, htotal + eoff[d - elo],
                                   htotal + eoff[d - elo] + blk.cols());
            set_block(row, 0, htotal + eoff[d - elo], cur - blk);
        }
        if (d + 1 >= elo && d + 1 <= ehi && eb[d + 1 - elo].cols() > 0) {
            Matrix blk = kronecker(Matrix::identity(fs, z.term(d)->dim()),
                                   w.diff(d).matrix.transpose()) *
                         eb[d + 1 - elo];
            Matrix cur = submatrix(row, 0, rows, htotal + eoff[d + 1 - elo],
                                   htotal + eoff[d + 1 - elo] + blk.cols());
            set_block(row, 0, htotal + eoff[d + 1 - elo], cur - blk);
        }
        sys = vstack(sys, row);
        rhs = vstack(rhs, map_to_vec(g.comp(d)));
    }
    auto sol = solve(sys, rhs);
    check(sol.has_value(), Errc::Internal,
          "lift through approximation failed (approximation property violated)");
    std::map<int, Matrix> comps;
    for (int d = hlo; d <= hhi; ++d) {
        int h = hb[d - hlo].cols();
        if (h == 0) continue;
        Matrix slice = submatrix(*sol, hoff[d - hlo], hoff[d - hlo] + h, 0, 1);
        Matrix m = vec_to_map(hb[d - hlo] * slice, zc.term(d)->dim(), w.term(d)->dim());
        if (!m.is_zero()) comps[d] = m;
    }
    return ChainMap(w, zc, std::move(comps), true);
}

PiCResult pi_C(const BoundedComplex& v, const SubcatDescriptor& c) {
    Approximation ap = c_approximation(v, c);
    Minimized mini = minimize(ap.complex);
    HeartObject obj = certify_heart(mini.complex, c);
    return {obj, ap, mini};
}

// ---- truncations ------------------------------------------------------------------

ChainMap truncate_leq0_A(const BoundedComplex& x) {
    if (x.window_empty() || x.hi() <= -1) return ChainMap::identity(x);
    SubmoduleResult ker = kernel_of(x.diff(0));
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    for (int d = x.lo(); d < 0; ++d) terms.push_back(x.term(d));
    terms.push_back(ker.module);
    for (int d = x.lo(); d < -1; ++d) diffs.push_back(x.diff(d));
    if (x.lo() < 0) {
        auto rest = solve(ker.inclusion.matrix, x.diff(-1).matrix);
        check(rest.has_value(), Errc::Internal, "d^{-1} does not land in Ker d^0");
        diffs.emplace_back(x.term(-1), ker.module, *rest, false);
    }
    BoundedComplex t(x.algebra(), x.lo() < 0 ? x.lo() : 0, terms, diffs, false);
    std::map<int, Matrix> comps;
    for (int d = t.lo(); d < 0; ++d)
        if (t.term(d)->dim() > 0)
            comps[d] = Matrix::identity(x.algebra()->field(), t.term(d)->dim());
    if (ker.module->dim() > 0) comps[0] = ker.inclusion.matrix;
    return ChainMap(t.trimmed(), x, std::move(comps), true);
}

ChainMap truncate_geq0_A(const BoundedComplex& x) {
    // Ker d^{-1} is installed in degree -2 whenever anything lives below 0.
    if (x.window_empty() || x.lo() >= 0) return ChainMap::identity(x);
    SubmoduleResult ker = kernel_of(x.diff(-1));
    std::vector<ModulePtr> terms{ker.module};
    std::vector<ModuleMap> diffs;
    diffs.emplace_back(ker.module, x.term(-1), ker.inclusion.matrix, false);
    for (int d = -1; d <= x.hi(); ++d) {
        terms.push_back(x.term(d));
        if (d < x.hi()) diffs.push_back(x.diff(d));
    }
    BoundedComplex t(x.algebra(), -2, terms, diffs, false);
    std::map<int, Matrix> comps;
    // x -> t: identity in degrees >= -1, corestricted d^{-2} at degree -2
    for (int d = -1; d <= x.hi(); ++d)
        if (x.term(d)->dim() > 0)
            comps[d] = Matrix::identity(x.algebra()->field(), x.term(d)->dim());
    if (x.term(-2)->dim() > 0 && ker.module->dim() > 0) {
        auto co = solve(ker.inclusion.matrix, x.diff(-2).matrix);
        check(co.has_value(), Errc::Internal, "d^{-2} does not land in Ker d^{-1}");
        comps[-2] = *co;
    }
    return ChainMap(x, t.trimmed(), std::move(comps), true);
}

HeartObject truncate_leq0(const BoundedComplex& x, const SubcatDescriptor& c) {
    ChainMap t = truncate_leq0_A(x);
    return pi_C(t.source, c).object;
}

HeartObject truncate_geq0(const BoundedComplex& x, const SubcatDescriptor& c) {
    ChainMap t = truncate_geq0_A(x);
    return pi_C(t.target, c).object;
}

// ---- heart arithmetic ----------------------------------------------------------------

HeartObject heart_ker(const ChainMap& f, const SubcatDescriptor& c) {
    ConeResult cn = cone(f);
    BoundedComplex shifted = shift(cn.cone, -1);
    ChainMap t = truncate_leq0_A(shifted);
    return pi_C(t.source, c).object;
}

HeartObject heart_coker(const ChainMap& f, const SubcatDescriptor& c) {
    ConeResult cn = cone(f);
    ChainMap t = truncate_geq0_A(cn.cone);
    return pi_C(t.target, c).object;
}

HeartObject heart_image(const ChainMap& f, const SubcatDescriptor& c) {
    // image = ker(target -> coker f)
    ConeResult cn = cone(f);
    ChainMap t = truncate_geq0_A(cn.cone);
    ChainMap target_to_tcone = compose(t, cn.from_target);
    Approximation ap = c_approximation(t.target, c);
    ChainMap into_approx = lift_through_approximation(target_to_tcone, ap);
    Minimized mini = minimize(ap.complex);
    ChainMap u = compose(mini.to_min, into_approx); // target(f) -> coker
    return heart_ker(u, c);
}

bool is_zero_heart(const BoundedComplex& v0) {
    BoundedComplex v = v0.trimmed();
    if (v.is_zero()) return true;
    if (v.hi() > 0) fail(Errc::BadInput, "not a heart representative (positive degrees)");
    const FieldSpec& fs = v.algebra()->field();
    ModulePtr x0 = v.term(0), x1 = v.term(-1);
    if (x0->dim() == 0) {
        // bounded-above withhout degree-0 part: zero iff heart object (callers
        // pass heart representatives, whose class is then T^{<0} cap heart = 0)
        return true;
    }
    Matrix hb = hom_space_matrix(x0, x1);
    if (hb.cols() == 0) return false;
    Matrix lhs = kronecker(v.diff(-1).matrix, Matrix::identity(fs, x0->dim())) * hb;
    auto sol = solve(lhs, map_to_vec(Matrix::identity(fs, x0->dim())));
    return sol.has_value();
}

bool is_surjective_heart(const ChainMap& f) {
    const BoundedComplex& x = f.source;
    const BoundedComplex& y = f.target;
    const FieldSpec& fs = x.algebra()->field();
    ModulePtr y0 = y.term(0);
    if (y0->dim() == 0) return true;
    DirectSum xy = direct_sum({x.term(0), y.term(-1)});
    Matrix combined = hstack(f.comp(0), y.diff(-1).matrix);
    Matrix hb = hom_space_matrix(y0, xy.module);
    if (hb.cols() == 0) return false;
    Matrix lhs = kronecker(combined, Matrix::identity(fs, y0->dim())) * hb;
    auto sol = solve(lhs, map_to_vec(Matrix::identity(fs, y0->dim())));
    return sol.has_value();
}

// ---- Serre functor ----------------------------------------------------------------------

BoundedComplex serre_A(const ModulePtr& m) {
    const AlgebraPtr& alg = m->algebra();
    if (m->dim() == 0) return BoundedComplex(alg);
    AlgebraPtr op = opposite_cached(alg);
    Decomposition dec = indecomposable_summands(m);
    BoundedComplex total(alg);
    for (const auto& s : dec.summands) {
        BoundedComplex piece(alg);
        if (is_projective(s.module)) {
            ModulePtr inj = dual_D(star_module(s.module, op), alg)
                                ->with_label("D(" + s.module->label() + "*)");
            piece = BoundedComplex::concentrated(inj, 0);
        } else {
            ModulePtr tau = transpose_dtr(s.module);
            ModuleMap h0 = injective_hull(tau);
            QuotientResult q0 = cokernel_of(h0);
            ModuleMap h1 = injective_hull(q0.module);
            Matrix d_mat = h1.matrix * q0.projection.matrix;
            std::vector<ModulePtr> terms{tau, h0.target, h1.target};
            std::vector<ModuleMap> diffs{h0, ModuleMap(h0.target, h1.target, d_mat, false)};
            piece = BoundedComplex(alg, -2, terms, diffs, true);
        }
        for (int t = 0; t < s.multiplicity; ++t) total = direct_sum_complex(total, piece);
    }
    return total.trimmed();
}

HeartObject serre_P(const ModulePtr& m, const SubcatDescriptor& c) {
    check(in_subcat(m, c), Errc::BadInput,
          "Serre functor input '" + m->label() + "' is not in the subcategory");
    return pi_C(serre_A(m), c).object;
}

// ---- simples ------------------------------------------------------------------------------

HeartObject simple_quotient_L(const ModulePtr& m, const SubcatDescriptor& c) {
    const FieldSpec& fs = m->algebra()->field();
    check(m->dim() > 0, Errc::BadInput, "simple quotient of the zero module");
    check(in_subcat(m, c), Errc::BadInput, "module not in the subcategory");

    HeartObject s = serre_P(m, c);
    BoundedComplex sx = s.cx;
    ModulePtr s0 = sx.term(0), s1 = sx.term(-1);
    BoundedComplex pm = BoundedComplex::concentrated(m, 0);

    // Hom_{H}(P_m, S) = Hom(m, S^0) / d(Hom(m, S^{-1})); tau must kill
    // rad End(m) up to homotopy.
    Matrix b0 = hom_space_matrix(m, s0);
    check(b0.cols() > 0, Errc::NoNonzeroTau, "no maps P_m -> S_C P_m at all");
    Matrix b1 = hom_space_matrix(m, s1);
    Matrix dspan(fs, b0.rows(), 0);
    if (b1.cols() > 0)
        dspan = column_space_basis(
            kronecker(sx.diff(-1).matrix, Matrix::identity(fs, m->dim())) * b1);
    Matrix functionals = kernel_basis(dspan.transpose()).transpose();

    EndAlgebra em = end_algebra(m);
    SubspaceBasis rad_end = jacobson_radical(em.algebra);

    Matrix sys(fs, 0, b0.cols());
    for (int t = 0; t < rad_end.columns.cols(); ++t) {
        Matrix r = em.realize(submatrix(rad_end.columns, 0, rad_end.columns.rows(), t, t + 1));
        Matrix block = functionals *
                       kronecker(Matrix::identity(fs, s0->dim()), r.transpose()) * b0;
        sys = vstack(sys, block);
    }
    Matrix sols = sys.rows() == 0 ? Matrix::identity(fs, b0.cols()) : kernel_basis(sys);
    Matrix tau_vec(fs, 0, 0);
    bool found = false;
    for (int t = 0; t < sols.cols() && !found; ++t) {
        Matrix v = b0 * submatrix(sols, 0, sols.rows(), t, t + 1);
        bool in_d = dspan.cols() > 0 && in_column_space(dspan, v);
        if (!v.is_zero() && !in_d) {
            tau_vec = v;
            found = true;
        }
    }
    check(found, Errc::NoNonzeroTau,
          "no nonzero tau with tau . rad = 0 (Serre duality violated?)");
    Matrix tau0 = vec_to_map(tau_vec, s0->dim(), m->dim());
    ChainMap tau(pm, sx, {{0, tau0}}, true);
    HeartObject l = heart_image(tau, c);
    HeartObject out = certify_heart(l.cx, c);
    // sanity: simplicity whenever test objects are available
    bool have_tests = !c.is_all() || c.indec_catalog.has_value();
    if (have_tests)
        check(is_simple(out.cx, c), Errc::Internal,
              "constructed simple quotient failed the Yoneda simplicity test");
    return out;
}

bool is_simple(const BoundedComplex& v0, const SubcatDescriptor& c) {
    Minimized mini = minimize(v0);
    BoundedComplex v = mini.complex;
    if (v.is_zero()) return false;
    if (v.hi() != 0) return false;
    ModulePtr x = v.term(0);
    if (x->dim() == 0 || !is_indecomposable(x)) return false;
    const FieldSpec& fs = v.algebra()->field();

    for (const auto& test : c.test_objects()) {
        // images/kernels of Hom(V, -) along the complex
        std::vector<Matrix> post; // vec images of postcomposition at each degree
        std::vector<Matrix> bases;
        for (int d = v.lo(); d <= 0; ++d) bases.push_back(hom_space_matrix(test, v.term(d)));
        for (int d = v.lo(); d < 0; ++d) {
            Matrix img = kronecker(v.diff(d).matrix, Matrix::identity(fs, test->dim())) *
                         bases[d - v.lo()];
            post.push_back(img);
        }
        // leftmost: injectivity of Hom(V, v^{lo}) -> Hom(V, v^{lo+1})
        if (v.lo() < 0) {
            if (bases[0].cols() - rank(post[0]) != 0) return false;
        }
        // interior exactness at spots lo+1..-1
        for (int d = v.lo() + 1; d < 0; ++d) {
            Matrix into = post[d - v.lo() - 1];
            Matrix out = post[d - v.lo()];
            // ker(out in coords) vs im(into in coords): compare dimensions and
            // containment inside Hom(V, v^d)
            Matrix outmat = out;
            int kerdim = bases[d - v.lo()].cols() - rank(outmat);
            Matrix iin = column_space_basis(into);
            if (iin.cols() != kerdim) return false;
            // im d_* must be killed by the next map (automatic: d d = 0)
        }
        // right end: image of Hom(V, v^{-1}) equals J(V, X)
        Matrix j = span_canonical(radical_hom_subspace(test, x));
        Matrix im = v.lo() < 0 ? span_canonical(post.back())
                               : span_canonical(Matrix(fs, x->dim() * test->dim(), 0));
        if (!(j == im)) return false;
    }
    return true;
}

std::pair<int, int> verify_serre_duality(const ModulePtr& m, const BoundedComplex& v,
                                         const SubcatDescriptor& c) {
    HeartObject s = serre_P(m, c);
    BoundedComplex pm = BoundedComplex::concentrated(m, 0);
    int lhs = hom_homotopy_dim(pm, v);
    int rhs = hom_homotopy_dim(v, s.cx);
    return {lhs, rhs};
}

bool verify_sigma_identity(const ModulePtr& cgen, const SubcatDescriptor& c,
                           const std::vector<BoundedComplex>& samples) {
    BoundedComplex sa = serre_A(cgen);
    HeartObject sc = serre_P(cgen, c);
    for (const auto& w : samples) {
        int lhs = hom_homotopy_dim(w, sa);
        PiCResult piw = pi_C(w, c);
        int rhs = hom_homotopy_dim(piw.object.cx, sc.cx);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace heartbox
