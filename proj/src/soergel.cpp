#include "heartbox/soergel.hpp"

#include <algorithm>

#include "heartbox/frobenius.hpp"

namespace heartbox {

namespace {

// Sparse polynomials in `rank` variables: exponent vector -> coefficient.
using ExpVec = std::vector<int>;
using Poly2 = std::map<ExpVec, Scalar>;

void poly_add_term(Poly2& p, const ExpVec& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = p.find(e);
    if (it == p.end())
        p.emplace(e, c);
    else {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Poly2 poly_mul2(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpVec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            poly_add_term(r, e, ca * cb);
        }
    return r;
}

int poly_total_degree_term(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Substitute variables by linear forms (columns of s on the variable basis).
Poly2 poly_substitute(const Poly2& p, const Matrix& s, const FieldSpec& fs) {
    int rank = s.rows();
    Poly2 out;
    for (const auto& [e, c] : p) {
        Poly2 term;
        poly_add_term(term, ExpVec(rank, 0), c);
        for (int v = 0; v < rank; ++v) {
            Poly2 image; // image of variable v
            for (int w = 0; w < rank; ++w) {
                ExpVec ew(rank, 0);
                ew[w] = 1;
                poly_add_term(image, ew, s.at(w, v));
            }
            for (int rep = 0; rep < e[v]; ++rep) term = poly_mul2(term, image);
        }
        for (const auto& [et, ct] : term) poly_add_term(out, et, ct);
    }
    return out;
}

std::vector<ExpVec> monomials_of_degree(int rank, int d) {
    std::vector<ExpVec> out;
    if (rank == 1) {
        out.push_back({d});
        return out;
    }
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
    return out;
}

Matrix poly_to_column(const Poly2& p, const std::vector<ExpVec>& mons, const FieldSpec& fs) {
    Matrix col(fs, static_cast<int>(mons.size()), 1);
    for (const auto& [e, c] : p) {
        auto it = std::find(mons.begin(), mons.end(), e);
        check(it != mons.end(), Errc::Internal, "monomial outside its degree list");
        col.set(static_cast<int>(it - mons.begin()), 0, c);
    }
    return col;
}

std::vector<Poly2> fundamental_invariants(const CoxeterDatum& w) {
    const FieldSpec& fs = w.field;
    Scalar one = Scalar::one(fs);
    auto term = [&](ExpVec e, long long c) {
        Poly2 p;
        poly_add_term(p, e, Scalar::from_int(fs, c));
        return p;
    };
    auto join = [&](std::initializer_list<Poly2> parts) {
        Poly2 p;
        for (const auto& q : parts)
            for (const auto& [e, c] : q) poly_add_term(p, e, c);
        return p;
    };
    (void)one;
    switch (w.type) {
        case CoxeterType::A1:
            return {term({2}, 1)};
        case CoxeterType::A1xA1:
            return {term({2, 0}, 1), term({0, 2}, 1)};
        case CoxeterType::A2:
            // e2, e3 of (y1, y2, -y1-y2)
            return {join({term({2, 0}, -1), term({1, 1}, -1), term({0, 2}, -1)}),
                    join({term({2, 1}, -1), term({1, 2}, -1)})};
        case CoxeterType::B2:
            return {join({term({2, 0}, 1), term({0, 2}, 1)}), term({2, 2}, 1)};
    }
    fail(Errc::Internal, "unhandled type");
}

} // namespace

CoinvariantAlgebra make_coinvariant(const CoxeterDatum& w) {
    const FieldSpec& fs = w.field;
    if (fs.is_fp())
        check(fs.p > static_cast<std::uint64_t>(w.order()), Errc::BadPrime,
              "coinvariant algebra needs p > |W| = " + std::to_string(w.order()));
    CoinvariantAlgebra R;
    R.datum = w;
    const int rank = w.rank;
    const int topdeg = w.num_positive_roots;

    std::vector<Poly2> inv = fundamental_invariants(w);
    // W-invariance of the generators
    for (const auto& f : inv)
        for (const auto& s : w.reflections) {
            Poly2 sf = poly_substitute(f, s, fs);
            check(poly_to_column(sf, monomials_of_degree(rank, poly_total_degree_term(sf.begin()->first)), fs) ==
                      poly_to_column(f, monomials_of_degree(rank, poly_total_degree_term(f.begin()->first)), fs),
                  Errc::Internal, "fundamental invariant is not W-invariant");
        }

    // per-degree monomials, ideal span, chosen monomial complement, reduction
    std::vector<std::vector<ExpVec>> mons(topdeg + 3);
    std::vector<Matrix> reduction(topdeg + 3); // coeff column -> chosen coords
    std::vector<std::vector<int>> chosen(topdeg + 3);
    for (int d = 0; d <= topdeg + 2; ++d) {
        mons[d] = monomials_of_degree(rank, d);
        const int nd = static_cast<int>(mons[d].size());
        Matrix ideal(fs, nd, 0);
        for (const auto& f : inv) {
            int fdeg = poly_total_degree_term(f.begin()->first);
            if (fdeg > d) continue;
            for (const auto& m : monomials_of_degree(rank, d - fdeg)) {
                Poly2 mono;
                poly_add_term(mono, m, Scalar::one(fs));
                ideal = hstack(ideal, poly_to_column(poly_mul2(mono, f), mons[d], fs));
            }
        }
        ideal = column_space_basis(ideal);
        Matrix comp = complement_basis(ideal, nd);
        for (int c = 0; c < comp.cols(); ++c)
            for (int r = 0; r < nd; ++r)
                if (!comp.at(r, c).is_zero()) chosen[d].push_back(r);
        if (d > topdeg)
            check(chosen[d].empty(), Errc::Internal,
                  "coinvariant algebra does not vanish above the top degree");
        Matrix t = ideal.cols() == 0 ? comp : hstack(ideal, comp);
        auto tinv = inverse(t);
        check(tinv.has_value(), Errc::Internal, "degree piece split failed");
        reduction[d] = submatrix(*tinv, ideal.cols(), nd, 0, nd);
    }

    // global basis
    std::vector<int> basis_degree, basis_mon;
    for (int d = 0; d <= topdeg; ++d) {
        R.graded_dims.push_back(static_cast<int>(chosen[d].size()));
        for (int r : chosen[d]) {
            basis_degree.push_back(d);
            basis_mon.push_back(r);
            R.monomial_exponents.push_back(mons[d][r]);
            R.monomial_degrees.push_back(d);
        }
    }
    const int dim = static_cast<int>(basis_degree.size());
    check(dim == w.order(), Errc::Internal,
          "coinvariant dimension " + std::to_string(dim) + " != |W| = " +
              std::to_string(w.order()));

    auto reduce_poly = [&](const Poly2& p) {
        // coordinates of p in the global basis
        Matrix out(fs, dim, 1);
        std::map<int, Poly2> by_degree;
        for (const auto& [e, c] : p) poly_add_term(by_degree[poly_total_degree_term(e)], e, c);
        for (const auto& [d, part] : by_degree) {
            if (d > topdeg) continue; // lands in the ideal in high degree
            Matrix coords = reduction[d] * poly_to_column(part, mons[d], fs);
            int offset = 0;
            for (int dd = 0; dd < d; ++dd) offset += R.graded_dims[dd];
            for (int t = 0; t < coords.rows(); ++t)
                out.set(offset + t, 0, out.at(offset + t, 0) + coords.at(t, 0));
        }
        return out;
    };

    // structure constants
    std::vector<Algebra::MulEntry> mul;
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) {
        std::string lab = "1";
        const auto& e = R.monomial_exponents[i];
        if (poly_total_degree_term(e) > 0) {
            lab.clear();
            const char* names[2] = {"a", "b"};
            for (int v = 0; v < rank; ++v) {
                if (e[v] == 0) continue;
                lab += names[v];
                if (e[v] > 1) lab += "^" + std::to_string(e[v]);
            }
        }
        labels.push_back(lab);
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            ExpVec e(rank);
            for (int v = 0; v < rank; ++v)
                e[v] = R.monomial_exponents[i][v] + R.monomial_exponents[j][v];
            Poly2 prod;
            poly_add_term(prod, e, Scalar::one(fs));
            Matrix coords = reduce_poly(prod);
            for (int k = 0; k < dim; ++k)
                if (!coords.at(k, 0).is_zero()) mul.push_back({i, j, k, coords.at(k, 0)});
        }
    std::vector<Scalar> unit(dim, Scalar::zero(fs));
    unit[0] = Scalar::one(fs);
    R.algebra = std::make_shared<Algebra>(
        "coinvariant_" + coxeter_type_to_string(w.type), fs, labels, std::move(mul),
        std::move(unit));
    validate_or_throw(*R.algebra);

    // reflection actions, roots, invariant subrings, rank-2 decompositions
    for (int s = 0; s < static_cast<int>(w.reflections.size()); ++s) {
        Matrix act(fs, dim, dim);
        for (int i = 0; i < dim; ++i) {
            Poly2 mono;
            poly_add_term(mono, R.monomial_exponents[i], Scalar::one(fs));
            Matrix col = reduce_poly(poly_substitute(mono, w.reflections[s], fs));
            for (int r = 0; r < dim; ++r) act.set(r, i, col.at(r, 0));
        }
        R.refl_action.push_back(act);

        Poly2 root;
        ExpVec ey(rank, 0);
        for (int v = 0; v < rank; ++v) {
            ExpVec e(rank, 0);
            e[v] = 1;
            poly_add_term(root, e, w.simple_roots[s].at(v, 0));
        }
        R.alpha.push_back(reduce_poly(root));

        Matrix inv_basis = kernel_basis(act - Matrix::identity(fs, dim));
        R.invariants.push_back(inv_basis);
        check(2 * inv_basis.cols() == dim, Errc::Internal, "R is not free of rank 2 over R^s");

        Matrix alpha_inv = R.algebra->left_mult_of(R.alpha[s]) * inv_basis;
        Matrix combined = hstack(inv_basis, alpha_inv);
        auto dec = inverse(combined);
        check(dec.has_value(), Errc::Internal, "1, alpha_s is not an R^s-basis of R");
        Matrix top = submatrix(*dec, 0, inv_basis.cols(), 0, dim);
        Matrix bot = submatrix(*dec, inv_basis.cols(), dim, 0, dim);
        R.apart.push_back(inv_basis * top);
        R.bpart.push_back(inv_basis * bot);
    }

    // trivial module: degree-0 coefficient of the action
    std::vector<Matrix> kact;
    for (int i = 0; i < dim; ++i) {
        Matrix a(fs, 1, 1);
        if (R.monomial_degrees[i] == 0) a.set_int(0, 0, 1);
        kact.push_back(a);
    }
    R.trivial = Module::make(R.algebra, kact, "k");
    R.regular = Module::regular(R.algebra)->with_label("R");
    return R;
}

ModulePtr tensor_Bs(const CoinvariantAlgebra& R, const ModulePtr& m, int s) {
    const FieldSpec& fs = R.algebra->field();
    const int dim = R.dim(), md = m->dim();
    check(algebras_compatible(m->algebra(), R.algebra), Errc::AlgebraMismatch,
          "module is not over the coinvariant algebra");
    std::vector<Matrix> action;
    for (int i = 0; i < dim; ++i) {
        // e_i = a + b alpha; e_i * alpha = a' + b' alpha
        Matrix a = submatrix(R.apart[s], 0, dim, i, i + 1);
        Matrix b = submatrix(R.bpart[s], 0, dim, i, i + 1);
        Matrix ei_alpha = R.algebra->multiply(R.algebra->basis_vector(i), R.alpha[s]);
        Matrix ap(fs, dim, 1), bp(fs, dim, 1);
        for (int r = 0; r < dim; ++r) {
            Scalar av = Scalar::zero(fs), bv = Scalar::zero(fs);
            for (int q = 0; q < dim; ++q) {
                av = av + R.apart[s].at(r, q) * ei_alpha.at(q, 0);
                bv = bv + R.bpart[s].at(r, q) * ei_alpha.at(q, 0);
            }
            ap.set(r, 0, av);
            bp.set(r, 0, bv);
        }
        Matrix blk(fs, 2 * md, 2 * md);
        set_block(blk, 0, 0, m->action_of(a));
        set_block(blk, 0, md, m->action_of(ap));
        set_block(blk, md, 0, m->action_of(b));
        set_block(blk, md, md, m->action_of(bp));
        action.push_back(blk);
    }
    return Module::make(R.algebra, action, "Bs(" + R.datum.labels[s] + ")." + m->label());
}

ModuleMap tensor_Bs_map(const CoinvariantAlgebra& R, const ModuleMap& f, int s) {
    ModulePtr src = tensor_Bs(R, f.source, s);
    ModulePtr dst = tensor_Bs(R, f.target, s);
    return ModuleMap(src, dst, direct_sum(f.matrix, f.matrix), false);
}

ModuleMap eta_Bs(const CoinvariantAlgebra& R, const ModulePtr& m, int s) {
    const FieldSpec& fs = R.algebra->field();
    check(!fs.is_fp() || fs.p != 2, Errc::CharTwo, "c_s needs characteristic != 2");
    ModulePtr t = tensor_Bs(R, m, s);
    const int md = m->dim();
    Scalar half = Scalar::from_int(fs, 2).inv();
    Matrix mat(fs, 2 * md, md);
    set_block(mat, 0, 0, m->action_of(R.alpha[s]).scaled(half));
    set_block(mat, md, 0, Matrix::identity(fs, md).scaled(half));
    return ModuleMap(m, t, mat, true);
}

ModulePtr bott_samelson(const CoinvariantAlgebra& R, const std::vector<int>& word) {
    ModulePtr cur = R.trivial;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = tensor_Bs(R, cur, *it);
    std::string lab = "BS(";
    for (std::size_t i = 0; i < word.size(); ++i)
        lab += (i ? "," : "") + R.datum.labels[word[i]];
    return cur->with_label(lab + ")");
}

SoergelCatalog build_soergel_catalog(const CoinvariantAlgebra& R) {
    SoergelCatalog cat{R, {}};
    const auto& w = R.datum;
    cat.modules.resize(w.order());
    // BFS order of elements is by length already
    for (int idx = 0; idx < w.order(); ++idx) {
        const auto& word = w.elements[idx].word;
        if (word.empty()) {
            cat.modules[idx] = R.trivial->with_label("B_e");
            continue;
        }
        ModulePtr bs = bott_samelson(R, word);
        Decomposition dec = indecomposable_summands(bs);
        std::vector<const Summand*> fresh;
        for (const auto& s : dec.summands) {
            bool known = false;
            for (int prev = 0; prev < idx && !known; ++prev)
                if (cat.modules[prev] && s.module->dim() == cat.modules[prev]->dim() &&
                    is_isomorphic(s.module, cat.modules[prev]))
                    known = true;
            if (!known) fresh.push_back(&s);
        }
        check(fresh.size() == 1 && fresh[0]->multiplicity == 1, Errc::Internal,
              "Bott-Samelson of a reduced word must contribute exactly one new summand");
        std::string lab = "B_";
        for (int letter : word) lab += w.labels[letter];
        cat.modules[idx] = fresh[0]->module->with_label(lab);
        check(is_indecomposable(cat.modules[idx]), Errc::Internal,
              "new Soergel module is not indecomposable");
    }
    // B_{w0} = R
    check(is_isomorphic(cat.modules[w.longest], R.regular), Errc::Internal,
          "B_{w_0} is not the regular module");
    return cat;
}

std::map<int, int> decompose_soergel(const SoergelCatalog& cat, const std::vector<int>& word) {
    ModulePtr bs = bott_samelson(cat.R, word);
    Decomposition dec = indecomposable_summands(bs);
    std::map<int, int> out;
    for (const auto& s : dec.summands) {
        bool matched = false;
        for (int idx = 0; idx < cat.R.datum.order() && !matched; ++idx) {
            if (cat.modules[idx]->dim() == s.module->dim() &&
                is_isomorphic(cat.modules[idx], s.module)) {
                out[idx] += s.multiplicity;
                matched = true;
            }
        }
        check(matched, Errc::Internal,
              "Bott-Samelson summand is not a Soergel module (catalog incomplete?)");
    }
    return out;
}

BoundedComplex rouquier_complex(const CoinvariantAlgebra& R, const std::vector<int>& word) {
    const FieldSpec& fs = R.algebra->field();
    check(!fs.is_fp() || fs.p != 2, Errc::CharTwo, "Rouquier complexes need characteristic != 2");
    BoundedComplex cur = BoundedComplex::concentrated(R.trivial, 0);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int s = *it;
        // T_s applied to the whole complex
        std::vector<ModulePtr> terms;
        std::vector<ModuleMap> diffs;
        for (int d = cur.lo(); d <= cur.hi(); ++d) terms.push_back(tensor_Bs(R, cur.term(d), s));
        for (int d = cur.lo(); d < cur.hi(); ++d) {
            ModuleMap td = tensor_Bs_map(R, cur.diff(d), s);
            diffs.emplace_back(terms[d - cur.lo()], terms[d - cur.lo() + 1], td.matrix, false);
        }
        BoundedComplex tcur(R.algebra, cur.lo(), terms, diffs, false);
        std::map<int, Matrix> comps;
        for (int d = cur.lo(); d <= cur.hi(); ++d) {
            if (cur.term(d)->dim() == 0) continue;
            comps[d] = eta_Bs(R, cur.term(d), s).matrix;
        }
        ChainMap eta(cur, tcur, std::move(comps), true);
        cur = cone(eta).cone.trimmed();
    }
    return cur;
}

bool tau_geq0_shape_check(const CoinvariantAlgebra& R, const std::vector<int>& word) {
    BoundedComplex k = rouquier_complex(R, word);
    ChainMap t = truncate_geq0_A(k);
    const BoundedComplex& tk = t.target;
    if (!is_isomorphic(tk.term(0), bott_samelson(R, word))) return false;
    if (word.empty()) return tk.term(-1)->dim() == 0;
    std::vector<ModulePtr> deleted;
    for (std::size_t i = 0; i < word.size(); ++i) {
        std::vector<int> sub;
        for (std::size_t j = 0; j < word.size(); ++j)
            if (j != i) sub.push_back(word[j]);
        deleted.push_back(bott_samelson(R, sub));
    }
    ModulePtr expect = deleted.size() == 1 ? deleted[0] : direct_sum(deleted).module;
    return is_isomorphic(tk.term(-1), expect);
}

int verma_ext(const CoinvariantAlgebra& R, const std::vector<int>& word, int i) {
    check(i >= 0, Errc::BadInput, "Ext index must be >= 0");
    BoundedComplex k = rouquier_complex(R, word);
    // cochain C^j = Hom(K^{-j}, k), differential = precomposition
    auto hom_at = [&](int j) { return hom_space_matrix(k.term(-j), R.trivial); };
    const FieldSpec& fs = R.algebra->field();
    Matrix hi = hom_at(i);
    auto functor_matrix = [&](int j, const Matrix& hsrc, const Matrix& hdst) {
        // Hom(K^{-j}, k) -> Hom(K^{-j-1}, k): f -> f o d^{-j-1}
        Matrix img(fs, hdst.rows(), hsrc.cols());
        for (int t = 0; t < hsrc.cols(); ++t) {
            Matrix f = vec_to_map(submatrix(hsrc, 0, hsrc.rows(), t, t + 1), 1,
                                  k.term(-j)->dim());
            set_block(img, 0, t, map_to_vec(f * k.diff(-j - 1).matrix));
        }
        if (hdst.cols() == 0) return Matrix(fs, 0, hsrc.cols());
        auto coords = solve(hdst, img);
        check(coords.has_value(), Errc::Internal, "verma cochain escaped the hom space");
        return *coords;
    };
    Matrix out_map = functor_matrix(i, hi, hom_at(i + 1));
    int ker = hi.cols() - rank(out_map);
    if (i == 0) return ker;
    Matrix in_map = functor_matrix(i - 1, hom_at(i - 1), hi);
    return ker - rank(in_map);
}

std::vector<int> verma_ext_table(const CoinvariantAlgebra& R, const std::vector<int>& word,
                                 int max_i) {
    std::vector<int> out;
    for (int i = 0; i <= max_i; ++i) out.push_back(verma_ext(R, word, i));
    return out;
}

SubcatDescriptor soergel_subcat(const SoergelCatalog& cat) {
    return SubcatDescriptor::add(cat.R.algebra, cat.modules, std::nullopt, false);
}

BoundedComplex r_sigma_trivial(const SoergelCatalog& cat) {
    SubcatDescriptor c = soergel_subcat(cat);
    HeartObject db_k = serre_P(cat.R.trivial, c); // d_B P_k = S_B P_{k*}, k* = k
    return duality_dR_complex(db_k.cx);
}

} // namespace heartbox
