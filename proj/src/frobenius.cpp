#include "heartbox/frobenius.hpp"

#include <map>
#include <mutex>

namespace heartbox {

bool is_frobenius(const AlgebraPtr& a) {
    static std::mutex mu;
    static std::map<const Algebra*, bool> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(a.get());
        if (it != cache.end()) return it->second;
    }
    AlgebraPtr op = opposite_cached(a);
    ModulePtr left_reg = Module::regular(a);
    ModulePtr dual_right = dual_D(Module::regular(op), a);
    bool result = is_isomorphic(left_reg, dual_right);
    std::lock_guard<std::mutex> lock(mu);
    cache[a.get()] = result;
    return result;
}

ModulePtr star_same(const ModulePtr& m) {
    const AlgebraPtr& a = m->algebra();
    check(a->is_commutative(), Errc::NotCommutative, "star_same needs a commutative algebra");
    AlgebraPtr op = opposite_cached(a);
    ModulePtr st = star_module(m, op);
    // same multiplication tables, rebase over a
    return Module::make(a, st->actions(), m->label() + "*", false);
}

BoundedComplex duality_dA_P(const ModulePtr& m) {
    const AlgebraPtr& a = m->algebra();
    check(is_frobenius(a), Errc::NotFrobenius,
          "d_A needs a Frobenius algebra; '" + a->name() + "' is not self-injective");
    if (m->dim() == 0) return BoundedComplex(a);
    ModulePtr mstar = star_same(m);
    MinResolution pres = min_projective_resolution(mstar, 1);
    if (pres.terms[1]->dim() == 0)
        return BoundedComplex::concentrated(pres.terms[0], 0);
    SubmoduleResult ker = kernel_of(pres.diffs[0]);
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    if (ker.module->dim() > 0) {
        terms = {ker.module, pres.terms[1], pres.terms[0]};
        diffs = {ker.inclusion, pres.diffs[0]};
        return BoundedComplex(a, -2, terms, diffs, true);
    }
    terms = {pres.terms[1], pres.terms[0]};
    diffs = {pres.diffs[0]};
    return BoundedComplex(a, -1, terms, diffs, true);
}

namespace {

// Data of d_A P_M with the presentation that produced it.
struct DAData {
    BoundedComplex cx;
    ModulePtr mstar;
    MinResolution pres;
};

DAData da_data(const ModulePtr& m) {
    const AlgebraPtr& a = m->algebra();
    DAData out{BoundedComplex(a), nullptr, {}};
    if (m->dim() == 0) return out;
    out.mstar = star_same(m);
    out.pres = min_projective_resolution(out.mstar, 1);
    out.cx = duality_dA_P(m);
    return out;
}

} // namespace

ChainMap duality_dA_map(const ModuleMap& g) {
    const AlgebraPtr& a = g.source->algebra();
    const FieldSpec& fs = a->field();
    DAData dm = da_data(g.target); // d_A P_M
    DAData dl = da_data(g.source); // d_A P_L
    if (g.target->dim() == 0 || g.source->dim() == 0)
        return ChainMap(dm.cx, dl.cx, {}, false);

    AlgebraPtr op = opposite_cached(a);
    ModuleMap gstar_op = star_map(g, op); // M* -> L* over op
    // rebase over a (same tables)
    ModuleMap gstar(Module::make(a, gstar_op.source->actions(), "", false),
                    Module::make(a, gstar_op.target->actions(), "", false), gstar_op.matrix,
                    false);
    // component at 0: lift gstar through the augmentations
    auto phi0 = solve_map_with_condition(dm.pres.terms[0], dl.pres.terms[0],
                                         dl.pres.augmentation.matrix,
                                         gstar.matrix * dm.pres.augmentation.matrix);
    check(phi0.has_value(), Errc::Internal, "d_A lift at degree 0 failed");
    std::map<int, Matrix> comps;
    if (!phi0->matrix.is_zero()) comps[0] = phi0->matrix;
    // component at -1: lift phi0 d_M through d_L
    if (dm.pres.terms[1]->dim() > 0 && dl.pres.terms[1]->dim() > 0) {
        auto phi1 = solve_map_with_condition(dm.pres.terms[1], dl.pres.terms[1],
                                             dl.pres.diffs[0].matrix,
                                             phi0->matrix * dm.pres.diffs[0].matrix);
        check(phi1.has_value(), Errc::Internal, "d_A lift at degree -1 failed");
        if (!phi1->matrix.is_zero()) comps[-1] = phi1->matrix;
        // component at -2: restrict to the kernels
        if (dm.cx.term(-2)->dim() > 0 && dl.cx.term(-2)->dim() > 0) {
            Matrix km = dm.cx.diff(-2).matrix; // Ker_M -> P'^{-1}_M
            Matrix kl = dl.cx.diff(-2).matrix;
            auto phi2 = solve(kl, phi1->matrix * km);
            check(phi2.has_value(), Errc::Internal, "d_A kernel restriction failed");
            if (!phi2->is_zero()) comps[-2] = *phi2;
        }
    }
    (void)fs;
    return ChainMap(dm.cx, dl.cx, std::move(comps), true);
}

BoundedComplex duality_dA(const BoundedComplex& v0) {
    BoundedComplex v = v0.trimmed();
    const AlgebraPtr& a = v.algebra();
    if (v.is_zero()) return BoundedComplex(a);
    check(v.hi() == 0 && v.lo() >= -2, Errc::BadInput,
          "duality_dA expects a three-term heart representative");
    ModulePtr l = v.term(-1), m = v.term(0);
    if (l->dim() == 0) {
        // V = P_M; d_A V = d_A P_M directly
        return duality_dA_P(m);
    }
    ChainMap phi = duality_dA_map(v.diff(-1));
    ConeResult cn = cone(phi);
    ChainMap t = truncate_leq0_A(shift(cn.cone, -1));
    return minimize(t.source).complex;
}

HeartObject duality_dC(const BoundedComplex& v, const SubcatDescriptor& c) {
    // DC = C sanity on the generators
    if (!c.is_all()) {
        AlgebraPtr op = opposite_cached(c.algebra);
        for (const auto& g : c.generators) {
            ModulePtr dg = Module::make(c.algebra, dual_D(g, op)->actions(), "D" + g->label(),
                                        false);
            check(in_subcat(dg, c), Errc::BadInput,
                  "subcategory is not closed under duality (DC != C)");
        }
    }
    ChainMap t = truncate_geq0_A(v);
    BoundedComplex da = duality_dA(t.target);
    return pi_C(da, c).object;
}

BoundedComplex duality_dR_complex(const BoundedComplex& y0) {
    BoundedComplex y = y0.trimmed();
    const AlgebraPtr& a = y.algebra();
    const FieldSpec& fs = a->field();
    if (y.is_zero()) return BoundedComplex(a);
    check(y.hi() <= 0, Errc::BadInput, "duality_dR expects a complex in degrees <= 0");
    const int m = -y.lo();

    // columns D_i = d_A P_{Y^{-i}}, padded to [-2, 0]
    std::vector<BoundedComplex> cols;
    for (int i = 0; i <= m; ++i) cols.push_back(duality_dA_P(y.term(-i)).padded(-2, 0));
    // signed horizontal maps C_1[i]: cols[i] -> cols[i+1]
    // stored per column as degree -> matrix, sign (-1)^degree folded in
    std::vector<std::vector<std::map<int, Matrix>>> c_maps(m + 1);
    // c_maps[k][i] : distance-(k) correction from column i (k >= 1)
    for (int k = 0; k <= m; ++k) c_maps[k].resize(std::max(0, m - k + 1));
    for (int i = 0; i + 1 <= m; ++i) {
        ChainMap phi = duality_dA_map(y.diff(-(i + 1)));
        std::map<int, Matrix> signed_phi;
        for (int j = -2; j <= 0; ++j) {
            Matrix mat = phi.comp(j);
            if (mat.rows() != cols[i + 1].term(j)->dim() || mat.cols() != cols[i].term(j)->dim()) {
                Matrix fixed(fs, cols[i + 1].term(j)->dim(), cols[i].term(j)->dim());
                if (!mat.is_zero()) set_block(fixed, 0, 0, mat);
                mat = fixed;
            }
            if (j % 2 != 0) mat = -mat;
            if (!mat.is_zero()) signed_phi[j] = mat;
        }
        c_maps[1][i] = std::move(signed_phi);
    }

    // corrections level by level: v c_k + c_k v = -defect_k
    for (int k = 2; k <= m; ++k) {
        for (int i = 0; i + k <= m; ++i) {
            // defect F^j: cols[i]^j -> cols[i+k]^{j+2-k}
            std::map<int, Matrix> f;
            for (int j = -2; j <= 0; ++j) {
                Matrix acc(fs, cols[i + k].term(j + 2 - k)->dim(), cols[i].term(j)->dim());
                for (int b = 1; b < k; ++b) {
                    int aa = k - b;
                    auto itb = c_maps[b][i].find(j);
                    if (itb == c_maps[b][i].end()) continue;
                    int jm = j + 1 - b;
                    auto ita = c_maps[aa][i + b].find(jm);
                    if (ita == c_maps[aa][i + b].end()) continue;
                    acc = acc + ita->second * itb->second;
                }
                if (!acc.is_zero()) f[j] = -acc;
            }
            if (f.empty()) {
                c_maps[k][i] = {};
                continue;
            }
            auto h = solve_degree_homotopy(cols[i], cols[i + k], f, 2 - k);
            check(h.has_value(), Errc::Internal,
                  "twisted totalization correction at distance " + std::to_string(k) + " failed");
            c_maps[k][i] = *h;
        }
    }

    // assemble the total complex: T^n = sum_i cols[i]^{n-i}
    int lo = -2, hi = m;
    std::vector<ModulePtr> terms;
    std::vector<std::vector<std::pair<int, int>>> layout; // (i, j) blocks, i ascending
    for (int n = lo; n <= hi; ++n) {
        std::vector<ModulePtr> parts;
        std::vector<std::pair<int, int>> lay;
        for (int i = 0; i <= m; ++i) {
            int j = n - i;
            if (j < -2 || j > 0) continue;
            parts.push_back(cols[i].term(j));
            lay.push_back({i, j});
        }
        layout.push_back(lay);
        terms.push_back(parts.empty() ? Module::zero(a) : direct_sum(parts).module);
    }
    std::vector<ModuleMap> diffs;
    for (int n = lo; n < hi; ++n) {
        const auto& src_lay = layout[n - lo];
        const auto& dst_lay = layout[n - lo + 1];
        Matrix d(fs, terms[n - lo + 1]->dim(), terms[n - lo]->dim());
        int coff = 0;
        for (const auto& [i, j] : src_lay) {
            int roff = 0;
            for (const auto& [i2, j2] : dst_lay) {
                Matrix blk(fs, cols[i2].term(j2)->dim(), cols[i].term(j)->dim());
                bool have = false;
                if (i2 == i && j2 == j + 1) {
                    blk = cols[i].diff(j).matrix;
                    have = true;
                } else if (i2 > i) {
                    int k = i2 - i;
                    if (j2 == j + 1 - k && k < static_cast<int>(c_maps.size()) &&
                        i < static_cast<int>(c_maps[k].size())) {
                        auto it = c_maps[k][i].find(j);
                        if (it != c_maps[k][i].end()) {
                            blk = it->second;
                            have = true;
                        }
                    }
                }
                if (have && !blk.is_zero()) set_block(d, roff, coff, blk);
                roff += cols[i2].term(j2)->dim();
            }
            coff += cols[i].term(j)->dim();
        }
        diffs.emplace_back(terms[n - lo], terms[n - lo + 1], d, false);
    }
    BoundedComplex total(a, lo, terms, diffs, true);
    return minimize(total).complex;
}

} // namespace heartbox
