#include "heartbox/complex.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace heartbox {

BoundedComplex::BoundedComplex(AlgebraPtr alg) : alg_(std::move(alg)) {}

BoundedComplex::BoundedComplex(AlgebraPtr alg, int lo, std::vector<ModulePtr> terms,
                               std::vector<ModuleMap> diffs, bool check_dd)
    : alg_(std::move(alg)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    check(diffs_.size() + 1 == terms_.size() || (terms_.empty() && diffs_.empty()), Errc::BadInput,
          "complex needs one differential between consecutive terms");
    for (const auto& t : terms_)
        check(algebras_compatible(t->algebra(), alg_), Errc::AlgebraMismatch,
              "complex terms over wrong algebra");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        check(diffs_[i].source->dim() == terms_[i]->dim() &&
                  diffs_[i].target->dim() == terms_[i + 1]->dim(),
              Errc::BadInput, "differential endpoints disagree with terms");
    }
    if (check_dd)
        for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
            check((diffs_[i + 1].matrix * diffs_[i].matrix).is_zero(), Errc::BadInput,
                  "d*d != 0 at degree " + std::to_string(lo_ + static_cast<int>(i)));
}

BoundedComplex BoundedComplex::concentrated(const ModulePtr& m, int degree) {
    if (m->dim() == 0) return BoundedComplex(m->algebra());
    return BoundedComplex(m->algebra(), degree, {m}, {});
}

BoundedComplex concentrated_shift(const ModulePtr& m, int n) {
    return BoundedComplex::concentrated(m, -n);
}

ModulePtr BoundedComplex::term(int d) const {
    if (window_empty() || d < lo_ || d > hi()) return Module::zero(alg_);
    return terms_[d - lo_];
}

ModuleMap BoundedComplex::diff(int d) const {
    if (!window_empty() && d >= lo_ && d < hi()) return diffs_[d - lo_];
    return ModuleMap::zero(term(d), term(d + 1));
}

bool BoundedComplex::is_zero() const { return total_dim() == 0; }

int BoundedComplex::total_dim() const {
    int t = 0;
    for (const auto& m : terms_) t += m->dim();
    return t;
}

BoundedComplex BoundedComplex::trimmed() const {
    int a = lo_, b = hi();
    while (a <= b && term(a)->dim() == 0) ++a;
    while (b >= a && term(b)->dim() == 0) --b;
    if (a > b) return BoundedComplex(alg_);
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    for (int d = a; d <= b; ++d) terms.push_back(term(d));
    for (int d = a; d < b; ++d) diffs.push_back(diff(d));
    return BoundedComplex(alg_, a, std::move(terms), std::move(diffs), false);
}

BoundedComplex BoundedComplex::padded(int lo, int hi) const {
    check(window_empty() || (lo <= lo_ && hi >= this->hi()), Errc::BadInput,
          "padding must enlarge the window");
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    for (int d = lo; d <= hi; ++d) terms.push_back(term(d));
    for (int d = lo; d < hi; ++d) diffs.push_back(diff(d));
    return BoundedComplex(alg_, lo, std::move(terms), std::move(diffs), false);
}

std::string BoundedComplex::describe() const {
    if (window_empty() || is_zero()) return "0";
    std::ostringstream os;
    os << "[";
    for (int d = lo(); d <= hi(); ++d) {
        if (d > lo()) os << " -> ";
        const auto& t = term(d);
        os << (t->label().empty() ? "dim" + std::to_string(t->dim()) : t->label());
    }
    os << "] @ [" << lo() << "," << hi() << "]";
    return os.str();
}

ChainMap::ChainMap(BoundedComplex src, BoundedComplex dst, std::map<int, Matrix> components,
                   bool check_comm)
    : source(std::move(src)), target(std::move(dst)), comps(std::move(components)) {
    for (auto& [d, m] : comps) {
        check(m.rows() == target.term(d)->dim() && m.cols() == source.term(d)->dim(),
              Errc::BadInput, "chain map component shape at degree " + std::to_string(d));
    }
    if (check_comm) check(commutes(), Errc::BadInput, "chain map does not commute with differentials");
}

Matrix ChainMap::comp(int d) const {
    auto it = comps.find(d);
    if (it != comps.end()) return it->second;
    return Matrix(source.algebra()->field(), target.term(d)->dim(), source.term(d)->dim());
}

bool ChainMap::commutes() const {
    int a = std::min(source.lo(), target.lo()) - 1;
    int b = std::max(source.hi(), target.hi()) + 1;
    for (int d = a; d <= b; ++d) {
        Matrix lhs = comp(d + 1) * source.diff(d).matrix;
        Matrix rhs = target.diff(d).matrix * comp(d);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool ChainMap::is_zero_map() const {
    for (const auto& [d, m] : comps)
        if (!m.is_zero()) return false;
    return true;
}

ChainMap ChainMap::identity(const BoundedComplex& x) {
    std::map<int, Matrix> comps;
    for (int d = x.lo(); d <= x.hi(); ++d)
        if (x.term(d)->dim() > 0)
            comps[d] = Matrix::identity(x.algebra()->field(), x.term(d)->dim());
    return ChainMap(x, x, std::move(comps), false);
}

ChainMap ChainMap::zero(const BoundedComplex& src, const BoundedComplex& dst) {
    return ChainMap(src, dst, {}, false);
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::map<int, Matrix> comps;
    int a = std::min(f.source.lo(), g.target.lo());
    int b = std::max(f.source.hi(), g.target.hi());
    for (int d = a; d <= b; ++d) {
        Matrix m = g.comp(d) * f.comp(d);
        if (!m.is_zero()) comps[d] = m;
    }
    return ChainMap(f.source, g.target, std::move(comps), false);
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
    std::map<int, Matrix> comps;
    int a = std::min(f.source.lo(), f.target.lo());
    int b = std::max(f.source.hi(), f.target.hi());
    for (int d = a; d <= b; ++d) {
        Matrix m = f.comp(d) + g.comp(d);
        if (!m.is_zero()) comps[d] = m;
    }
    return ChainMap(f.source, f.target, std::move(comps), false);
}

BoundedComplex shift(const BoundedComplex& x, int n) {
    if (x.window_empty()) return x;
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    Scalar sign = Scalar::from_int(x.algebra()->field(), n % 2 == 0 ? 1 : -1);
    for (int d = x.lo(); d <= x.hi(); ++d) terms.push_back(x.term(d));
    for (int d = x.lo(); d < x.hi(); ++d) {
        ModuleMap dd = x.diff(d);
        diffs.emplace_back(dd.source, dd.target, dd.matrix.scaled(sign), false);
    }
    return BoundedComplex(x.algebra(), x.lo() - n, std::move(terms), std::move(diffs), false);
}

ChainMap shift(const ChainMap& f, int n) {
    std::map<int, Matrix> comps;
    for (const auto& [d, m] : f.comps) comps[d - n] = m;
    return ChainMap(shift(f.source, n), shift(f.target, n), std::move(comps), false);
}

BoundedComplex direct_sum_complex(const BoundedComplex& a, const BoundedComplex& b) {
    if (a.window_empty()) return b;
    if (b.window_empty()) return a;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    for (int d = lo; d <= hi; ++d)
        terms.push_back(direct_sum({a.term(d), b.term(d)}).module);
    for (int d = lo; d < hi; ++d) {
        Matrix m = direct_sum(a.diff(d).matrix, b.diff(d).matrix);
        diffs.emplace_back(terms[d - lo], terms[d - lo + 1], m, false);
    }
    return BoundedComplex(a.algebra(), lo, std::move(terms), std::move(diffs), false);
}

ConeResult cone(const ChainMap& f) {
    const BoundedComplex& x = f.source;
    const BoundedComplex& y = f.target;
    const FieldSpec& fs = x.algebra()->field();
    int lo = std::min(x.lo() - 1, y.lo());
    int hi = std::max(x.hi() - 1, y.hi());
    std::vector<ModulePtr> terms;
    for (int d = lo; d <= hi; ++d) terms.push_back(direct_sum({x.term(d + 1), y.term(d)}).module);
    std::vector<ModuleMap> diffs;
    for (int d = lo; d < hi; ++d) {
        const ModulePtr& src = terms[d - lo];
        const ModulePtr& dst = terms[d - lo + 1];
        Matrix m(fs, dst->dim(), src->dim());
        int xs = x.term(d + 1)->dim();
        int xd = x.term(d + 2)->dim();
        set_block(m, 0, 0, -x.diff(d + 1).matrix);
        set_block(m, xd, 0, f.comp(d + 1));
        set_block(m, xd, xs, y.diff(d).matrix);
        diffs.emplace_back(src, dst, m, false);
    }
    BoundedComplex c(x.algebra(), lo, terms, diffs, true);
    // Y -> Cone
    std::map<int, Matrix> incl;
    for (int d = lo; d <= hi; ++d) {
        if (y.term(d)->dim() == 0) continue;
        Matrix m(fs, c.term(d)->dim(), y.term(d)->dim());
        set_block(m, x.term(d + 1)->dim(), 0, Matrix::identity(fs, y.term(d)->dim()));
        incl[d] = m;
    }
    // Cone -> X[1]
    BoundedComplex x1 = shift(x, 1);
    std::map<int, Matrix> proj;
    for (int d = lo; d <= hi; ++d) {
        if (x.term(d + 1)->dim() == 0) continue;
        Matrix m(fs, x.term(d + 1)->dim(), c.term(d)->dim());
        set_block(m, 0, 0, Matrix::identity(fs, x.term(d + 1)->dim()));
        proj[d] = m;
    }
    return {c, ChainMap(y, c, std::move(incl), false), ChainMap(c, x1, std::move(proj), false)};
}

ModulePtr cohomology(const BoundedComplex& x, int i) {
    if (x.term(i)->dim() == 0) return Module::zero(x.algebra());
    SubmoduleResult ker = kernel_of(x.diff(i));
    Matrix img = column_space_basis(x.diff(i - 1).matrix);
    auto img_in_ker = solve(ker.inclusion.matrix, img);
    check(img_in_ker.has_value(), Errc::Internal, "image not inside kernel");
    QuotientResult q = quotient_module(ker.module, *img_in_ker,
                                       "H^" + std::to_string(i) + "(" + x.describe() + ")");
    return q.module;
}

bool is_acyclic(const BoundedComplex& x) {
    for (int d = x.lo(); d <= x.hi(); ++d)
        if (cohomology(x, d)->dim() != 0) return false;
    return true;
}

// ---- hom modulo homotopy ----------------------------------------------------------

ChainMap HomotopyHomSpace::realize(const Matrix& coeff_col) const {
    std::map<int, Matrix> comps;
    int off = 0;
    for (std::size_t t = 0; t < degrees.size(); ++t) {
        int d = degrees[t];
        int h = hom_bases[t].cols();
        if (h > 0) {
            Matrix slice = submatrix(coeff_col, off, off + h, 0, 1);
            Matrix v = hom_bases[t] * slice;
            Matrix m = vec_to_map(v, target.term(d)->dim(), source.term(d)->dim());
            if (!m.is_zero()) comps[d] = m;
        }
        off += h;
    }
    return ChainMap(source, target, std::move(comps), false);
}

Matrix HomotopyHomSpace::coordinates_of(const ChainMap& f) const {
    const FieldSpec& fs = source.algebra()->field();
    int total = 0;
    for (const auto& b : hom_bases) total += b.cols();
    Matrix out(fs, total, 1);
    int off = 0;
    for (std::size_t t = 0; t < degrees.size(); ++t) {
        int d = degrees[t];
        int h = hom_bases[t].cols();
        if (h > 0) {
            auto coords = solve(hom_bases[t], map_to_vec(f.comp(d)));
            check(coords.has_value(), Errc::Internal, "chain map component not a module map");
            set_block(out, off, 0, *coords);
        }
        off += h;
    }
    return out;
}

HomotopyHomSpace hom_homotopy(const BoundedComplex& x, const BoundedComplex& y) {
    check(algebras_compatible(x.algebra(), y.algebra()), Errc::AlgebraMismatch,
          "hom between complexes over different algebras");
    const FieldSpec& fs = x.algebra()->field();
    HomotopyHomSpace out{x, y};

    int dlo = std::max(x.lo(), y.lo());
    int dhi = std::min(x.hi(), y.hi());
    std::vector<int> offsets;
    int total = 0;
    for (int d = dlo; d <= dhi; ++d) {
        out.degrees.push_back(d);
        out.hom_bases.push_back(hom_space_matrix(x.term(d), y.term(d)));
        offsets.push_back(total);
        total += out.hom_bases.back().cols();
    }
    auto slot = [&](int d) { return d - dlo; };

    if (total == 0) {
        out.chain_solutions = Matrix(fs, 0, 0);
        out.homotopy_subspace = Matrix(fs, 0, 0);
        out.chain_dim = out.homotopy_dim = out.quotient_dim = 0;
        return out;
    }

    // chain condition rows
    Matrix sys(fs, 0, total);
    for (int d = dlo - 1; d <= dhi; ++d) {
        int rows = y.term(d + 1)->dim() * x.term(d)->dim();
        if (rows == 0) continue;
        Matrix row(fs, rows, total);
        bool nonzero = false;
        if (d + 1 >= dlo && d + 1 <= dhi && out.hom_bases[slot(d + 1)].cols() > 0) {
            Matrix blk = kronecker(Matrix::identity(fs, y.term(d + 1)->dim()),
                                   x.diff(d).matrix.transpose()) *
                         out.hom_bases[slot(d + 1)];
            if (!blk.is_zero()) nonzero = true;
            set_block(row, 0, offsets[slot(d + 1)], blk);
        }
        if (d >= dlo && d <= dhi && out.hom_bases[slot(d)].cols() > 0) {
            Matrix blk = kronecker(y.diff(d).matrix, Matrix::identity(fs, x.term(d)->dim())) *
                         out.hom_bases[slot(d)];
            if (!blk.is_zero()) nonzero = true;
            Matrix cur = submatrix(row, 0, rows, offsets[slot(d)], offsets[slot(d)] + blk.cols());
            set_block(row, 0, offsets[slot(d)], cur - blk);
        }
        if (nonzero) sys = vstack(sys, row);
    }
    out.chain_solutions = sys.rows() == 0 ? Matrix::identity(fs, total) : kernel_basis(sys);
    out.chain_dim = out.chain_solutions.cols();

    // homotopy images dh + hd in the same coordinates
    Matrix him(fs, total, 0);
    int hlo = std::max(x.lo(), y.lo() + 1);
    int hhi = std::min(x.hi(), y.hi() + 1);
    for (int d = hlo; d <= hhi; ++d) {
        Matrix hb = hom_space_matrix(x.term(d), y.term(d - 1));
        for (int t = 0; t < hb.cols(); ++t) {
            Matrix h = vec_to_map(submatrix(hb, 0, hb.rows(), t, t + 1), y.term(d - 1)->dim(),
                                  x.term(d)->dim());
            Matrix col(fs, total, 1);
            // contributes d_y h at degree d
            if (d >= dlo && d <= dhi && out.hom_bases[slot(d)].cols() > 0) {
                Matrix raw = map_to_vec(y.diff(d - 1).matrix * h);
                auto coords = solve(out.hom_bases[slot(d)], raw);
                check(coords.has_value(), Errc::Internal, "homotopy image escapes hom space");
                set_block(col, offsets[slot(d)], 0, *coords);
            }
            // contributes h d_x at degree d-1
            if (d - 1 >= dlo && d - 1 <= dhi && out.hom_bases[slot(d - 1)].cols() > 0) {
                Matrix raw = map_to_vec(h * x.diff(d - 1).matrix);
                auto coords = solve(out.hom_bases[slot(d - 1)], raw);
                check(coords.has_value(), Errc::Internal, "homotopy image escapes hom space");
                Matrix cur = submatrix(col, offsets[slot(d - 1)], offsets[slot(d - 1)] + coords->rows(),
                                       0, 1);
                set_block(col, offsets[slot(d - 1)], 0, cur + *coords);
            }
            him = hstack(him, col);
        }
    }
    out.homotopy_subspace = column_space_basis(him);
    out.homotopy_dim = out.homotopy_subspace.cols();

    // quotient representatives: chain solutions independent of the homotopy span
    Matrix probe = out.homotopy_subspace.cols() > 0
                       ? hstack(out.homotopy_subspace, out.chain_solutions)
                       : out.chain_solutions;
    RrefResult rr = rref(probe);
    for (int c : rr.pivot_cols) {
        if (c < out.homotopy_subspace.cols()) continue;
        Matrix col = submatrix(out.chain_solutions, 0, total, c - out.homotopy_subspace.cols(),
                               c - out.homotopy_subspace.cols() + 1);
        out.quotient_reps.push_back(out.realize(col));
    }
    out.quotient_dim = static_cast<int>(out.quotient_reps.size());
    // every null-homotopic map is a chain map, so the dimensions subtract
    check(out.quotient_dim == out.chain_dim - out.homotopy_dim, Errc::Internal,
          "homotopy subspace escapes the chain-map space");
    return out;
}

int hom_homotopy_dim(const BoundedComplex& x, const BoundedComplex& y) {
    return hom_homotopy(x, y).quotient_dim;
}

bool is_nullhomotopic(const ChainMap& f) {
    if (f.is_zero_map()) return true;
    HomotopyHomSpace hh = hom_homotopy(f.source, f.target);
    Matrix coords = hh.coordinates_of(f);
    if (coords.rows() == 0) return true;
    if (hh.homotopy_subspace.cols() == 0) return coords.is_zero();
    return in_column_space(hh.homotopy_subspace, coords);
}

bool homotopic(const ChainMap& f, const ChainMap& g) {
    std::map<int, Matrix> comps;
    int a = std::min(f.source.lo(), f.target.lo());
    int b = std::max(f.source.hi(), f.target.hi());
    for (int d = a; d <= b; ++d) {
        Matrix m = f.comp(d) - g.comp(d);
        if (!m.is_zero()) comps[d] = m;
    }
    return is_nullhomotopic(ChainMap(f.source, f.target, std::move(comps), false));
}

std::optional<std::map<int, Matrix>> solve_degree_homotopy(const BoundedComplex& x,
                                                           const BoundedComplex& y,
                                                           const std::map<int, Matrix>& f,
                                                           int shift) {
    const FieldSpec& fs = x.algebra()->field();
    // unknown components h^d: x^d -> y^{d+shift-1}
    int hlo = std::max(x.lo(), y.lo() - shift + 1), hhi = std::min(x.hi(), y.hi() - shift + 1);
    std::vector<Matrix> hb;
    std::vector<int> hoff;
    int total = 0;
    for (int d = hlo; d <= hhi; ++d) {
        hb.push_back(hom_space_matrix(x.term(d), y.term(d + shift - 1)));
        hoff.push_back(total);
        total += hb.back().cols();
    }
    Matrix sys(fs, 0, std::max(total, 0));
    Matrix rhs(fs, 0, 1);
    for (int d = x.lo(); d <= x.hi(); ++d) {
        int rows = y.term(d + shift)->dim() * x.term(d)->dim();
        auto it = f.find(d);
        bool has_rhs = it != f.end() && !it->second.is_zero();
        if (rows == 0) {
            if (has_rhs) return std::nullopt;
            continue;
        }
        Matrix row(fs, rows, std::max(total, 0));
        if (d >= hlo && d <= hhi && hb[d - hlo].cols() > 0) {
            Matrix blk = kronecker(y.diff(d + shift - 1).matrix,
                                   Matrix::identity(fs, x.term(d)->dim())) *
                         hb[d - hlo];
            set_block(row, 0, hoff[d - hlo], blk);
        }
        if (d + 1 >= hlo && d + 1 <= hhi && hb[d + 1 - hlo].cols() > 0) {
            Matrix blk = kronecker(Matrix::identity(fs, y.term(d + shift)->dim()),
                                   x.diff(d).matrix.transpose()) *
                         hb[d + 1 - hlo];
            Matrix cur = submatrix(row, 0, rows, hoff[d + 1 - hlo],
                                   hoff[d + 1 - hlo] + blk.cols());
            set_block(row, 0, hoff[d + 1 - hlo], cur + blk);
        }
        sys = vstack(sys, row);
        rhs = vstack(rhs, has_rhs ? map_to_vec(it->second)
                                  : Matrix(fs, rows, 1));
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    std::map<int, Matrix> h;
    for (int d = hlo; d <= hhi; ++d) {
        int cnt = hb[d - hlo].cols();
        if (cnt == 0) continue;
        Matrix slice = submatrix(*sol, hoff[d - hlo], hoff[d - hlo] + cnt, 0, 1);
        Matrix m = vec_to_map(hb[d - hlo] * slice, y.term(d + shift - 1)->dim(),
                              x.term(d)->dim());
        if (!m.is_zero()) h[d] = m;
    }
    return h;
}

std::optional<ChainMap> find_chain_isomorphism(const BoundedComplex& x, const BoundedComplex& y,
                                               std::uint64_t seed) {
    BoundedComplex a = x.trimmed(), b = y.trimmed();
    if (a.window_empty() && b.window_empty())
        return ChainMap(a, b, {}, false);
    if (a.lo() != b.lo() || a.hi() != b.hi()) return std::nullopt;
    for (int d = a.lo(); d <= a.hi(); ++d)
        if (a.term(d)->dim() != b.term(d)->dim()) return std::nullopt;
    HomotopyHomSpace hh = hom_homotopy(a, b);
    const FieldSpec& fs = a.algebra()->field();
    auto invertible_everywhere = [&](const ChainMap& f) {
        for (int d = a.lo(); d <= a.hi(); ++d)
            if (rank(f.comp(d)) != a.term(d)->dim()) return false;
        return true;
    };
    for (int t = 0; t < hh.chain_solutions.cols(); ++t) {
        ChainMap f = hh.realize(
            submatrix(hh.chain_solutions, 0, hh.chain_solutions.rows(), t, t + 1));
        if (invertible_everywhere(f)) return f;
    }
    std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dull);
    std::uniform_int_distribution<long long> small(-3, 3);
    for (int trial = 0; trial < 128; ++trial) {
        Matrix coeff(fs, hh.chain_solutions.cols(), 1);
        for (int t = 0; t < coeff.rows(); ++t)
            coeff.set(t, 0, fs.is_fp() ? Scalar(fs, rng() % fs.p)
                                       : Scalar::from_int(fs, small(rng)));
        ChainMap f = hh.realize(hh.chain_solutions * coeff);
        if (invertible_everywhere(f)) return f;
    }
    return std::nullopt;
}

bool homotopy_equivalent(const BoundedComplex& x, const BoundedComplex& y) {
    Minimized mx = minimize(x), my = minimize(y);
    return find_chain_isomorphism(mx.complex, my.complex).has_value();
}

// ---- tensor products -----------------------------------------------------------------

TensorModule tensor_modules(const ModulePtr& m, const ModulePtr& n) {
    const AlgebraPtr& alg = m->algebra();
    check(algebras_compatible(alg, n->algebra()), Errc::AlgebraMismatch, "tensor across algebras");
    check(alg->is_commutative(), Errc::NotCommutative,
          "module tensor product needs a commutative algebra");
    const FieldSpec& fs = alg->field();
    const int dm = m->dim(), dn = n->dim();
    if (dm == 0 || dn == 0) {
        return {Module::zero(alg), Matrix(fs, 0, dm * dn), Matrix(fs, dm * dn, 0)};
    }
    Matrix rel(fs, dm * dn, 0);
    for (int i = 0; i < alg->dim(); ++i) {
        Matrix op = kronecker(m->action(i), Matrix::identity(fs, dn)) -
                    kronecker(Matrix::identity(fs, dm), n->action(i));
        rel = hstack(rel, op);
    }
    rel = column_space_basis(rel);
    const int u = rel.cols(), q = dm * dn - u;
    Matrix comp = complement_basis(rel, dm * dn);
    Matrix t = u == 0 ? comp : hstack(rel, comp);
    Matrix tinv = *inverse(t);
    Matrix proj = submatrix(tinv, u, dm * dn, 0, dm * dn);
    std::vector<Matrix> action;
    for (int i = 0; i < alg->dim(); ++i)
        action.push_back(proj * kronecker(m->action(i), Matrix::identity(fs, dn)) * comp);
    (void)q;
    ModulePtr mod = Module::make(alg, std::move(action), m->label() + "(x)" + n->label(), false);
    return {mod, proj, comp};
}

BoundedComplex tensor_complexes(const BoundedComplex& x, const BoundedComplex& y) {
    check(algebras_compatible(x.algebra(), y.algebra()), Errc::AlgebraMismatch,
          "tensor across algebras");
    check(x.algebra()->is_commutative(), Errc::NotCommutative,
          "tensor of complexes needs a commutative algebra");
    const FieldSpec& fs = x.algebra()->field();
    if (x.window_empty() || y.window_empty()) return BoundedComplex(x.algebra());

    std::map<std::pair<int, int>, TensorModule> blocks;
    for (int p = x.lo(); p <= x.hi(); ++p)
        for (int q = y.lo(); q <= y.hi(); ++q) blocks[{p, q}] = tensor_modules(x.term(p), y.term(q));

    int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
    std::vector<ModulePtr> terms;
    std::vector<std::vector<std::pair<int, int>>> layout; // per degree: (p,q) blocks with p asc
    for (int nd = lo; nd <= hi; ++nd) {
        std::vector<ModulePtr> parts;
        std::vector<std::pair<int, int>> lay;
        for (int p = x.lo(); p <= x.hi(); ++p) {
            int q = nd - p;
            if (q < y.lo() || q > y.hi()) continue;
            parts.push_back(blocks[{p, q}].module);
            lay.push_back({p, q});
        }
        layout.push_back(lay);
        terms.push_back(parts.empty() ? Module::zero(x.algebra()) : direct_sum(parts).module);
    }
    std::vector<ModuleMap> diffs;
    for (int nd = lo; nd < hi; ++nd) {
        const auto& src_lay = layout[nd - lo];
        const auto& dst_lay = layout[nd - lo + 1];
        Matrix m(fs, terms[nd - lo + 1]->dim(), terms[nd - lo]->dim());
        int coff = 0;
        for (const auto& [p, q] : src_lay) {
            const TensorModule& src = blocks.at({p, q});
            int roff = 0;
            for (const auto& [p2, q2] : dst_lay) {
                const TensorModule& dst = blocks.at({p2, q2});
                if (p2 == p + 1 && q2 == q) {
                    Matrix blk = dst.proj *
                                 kronecker(x.diff(p).matrix,
                                           Matrix::identity(fs, y.term(q)->dim())) *
                                 src.sect;
                    set_block(m, roff, coff, blk);
                } else if (p2 == p && q2 == q + 1) {
                    Matrix blk = dst.proj *
                                 kronecker(Matrix::identity(fs, x.term(p)->dim()),
                                           y.diff(q).matrix) *
                                 src.sect;
                    if (p % 2 != 0) blk = -blk;
                    set_block(m, roff, coff, blk);
                }
                roff += dst.module->dim();
            }
            coff += src.module->dim();
        }
        diffs.emplace_back(terms[nd - lo], terms[nd - lo + 1], m, false);
    }
    return BoundedComplex(x.algebra(), lo, std::move(terms), std::move(diffs), true).trimmed();
}

// ---- minimization ------------------------------------------------------------------------

namespace {

struct SlotTerm {
    std::vector<ModulePtr> slots;
    std::vector<int> offsets;
    Matrix basis;     // change of basis: decomposed coords -> original term
    Matrix basis_inv; // original -> decomposed
    int dim = 0;
};

SlotTerm decompose_term(const ModulePtr& m) {
    SlotTerm st;
    st.dim = m->dim();
    const FieldSpec& fs = m->algebra()->field();
    if (m->dim() == 0) {
        st.basis = Matrix(fs, 0, 0);
        st.basis_inv = Matrix(fs, 0, 0);
        return st;
    }
    Decomposition dec = indecomposable_summands(m);
    Matrix t(fs, m->dim(), 0);
    for (const auto& grp : dec.summands)
        for (int c = 0; c < grp.multiplicity; ++c) {
            st.offsets.push_back(t.cols());
            st.slots.push_back(grp.module);
            t = hstack(t, grp.inclusions[c].matrix);
        }
    st.basis = t;
    auto inv = inverse(t);
    check(inv.has_value(), Errc::Internal, "decomposition basis not invertible");
    st.basis_inv = *inv;
    return st;
}

} // namespace

Minimized minimize(const BoundedComplex& x0) {
    BoundedComplex cur = x0.trimmed();
    ChainMap to_min = ChainMap::identity(x0);
    ChainMap from_min = ChainMap::identity(x0);
    // retarget identities onto the trimmed complex
    to_min = ChainMap(x0, cur, to_min.comps, false);
    from_min = ChainMap(cur, x0, from_min.comps, false);
    const FieldSpec& fs = x0.algebra()->field();

    for (;;) {
        if (cur.window_empty() || cur.is_zero()) {
            cur = BoundedComplex(x0.algebra());
            to_min = ChainMap(x0, cur, {}, false);
            from_min = ChainMap(cur, x0, {}, false);
            break;
        }
        // decompose all terms and move to the split basis
        std::vector<SlotTerm> sts;
        for (int d = cur.lo(); d <= cur.hi(); ++d) sts.push_back(decompose_term(cur.term(d)));

        std::vector<ModulePtr> dec_terms;
        for (const auto& st : sts) {
            std::vector<ModulePtr> parts = st.slots;
            dec_terms.push_back(parts.empty() ? Module::zero(x0.algebra())
                                              : direct_sum(parts).module);
        }
        std::vector<ModuleMap> dec_diffs;
        for (int d = cur.lo(); d < cur.hi(); ++d) {
            Matrix m = sts[d - cur.lo() + 1].basis_inv * cur.diff(d).matrix * sts[d - cur.lo()].basis;
            dec_diffs.emplace_back(dec_terms[d - cur.lo()], dec_terms[d - cur.lo() + 1], m, false);
        }
        BoundedComplex dec(x0.algebra(), cur.lo(), dec_terms, dec_diffs, false);
        std::map<int, Matrix> fwd, bwd;
        for (int d = cur.lo(); d <= cur.hi(); ++d) {
            if (cur.term(d)->dim() == 0) continue;
            fwd[d] = sts[d - cur.lo()].basis_inv;
            bwd[d] = sts[d - cur.lo()].basis;
        }
        ChainMap iso_fwd(cur, dec, fwd, false);
        ChainMap iso_bwd(dec, cur, bwd, false);

        // hunt for an invertible component between matched slots
        int found_d = 0, found_l = -1, found_j = -1;
        for (int d = dec.lo(); d < dec.hi() && found_l < 0; ++d) {
            const SlotTerm& s = sts[d - dec.lo()];
            const SlotTerm& t = sts[d - dec.lo() + 1];
            Matrix dm = dec.diff(d).matrix;
            for (std::size_t l = 0; l < s.slots.size() && found_l < 0; ++l) {
                for (std::size_t j = 0; j < t.slots.size(); ++j) {
                    if (s.slots[l]->dim() != t.slots[j]->dim()) continue;
                    Matrix blk = submatrix(dm, t.offsets[j], t.offsets[j] + t.slots[j]->dim(),
                                           s.offsets[l], s.offsets[l] + s.slots[l]->dim());
                    if (rank(blk) == blk.rows() && blk.rows() > 0) {
                        found_d = d;
                        found_l = static_cast<int>(l);
                        found_j = static_cast<int>(j);
                        break;
                    }
                }
            }
        }
        if (found_l < 0) {
            to_min = compose(iso_fwd, to_min);
            from_min = compose(from_min, iso_bwd);
            cur = dec;
            break;
        }

        // Gaussian cancellation of slot l (degree d) against slot j (degree d+1).
        const int d = found_d;
        const SlotTerm& s = sts[d - dec.lo()];
        const SlotTerm& t = sts[d - dec.lo() + 1];
        int l0 = s.offsets[found_l], l1 = l0 + s.slots[found_l]->dim();
        int j0 = t.offsets[found_j], j1 = j0 + t.slots[found_j]->dim();
        auto drop_rows = [&](const Matrix& m, int a, int b) {
            if (m.rows() == 0) return m;
            Matrix up = submatrix(m, 0, a, 0, m.cols());
            Matrix down = submatrix(m, b, m.rows(), 0, m.cols());
            return vstack(up, down);
        };
        auto drop_cols = [&](const Matrix& m, int a, int b) {
            if (m.cols() == 0) return m;
            Matrix left = submatrix(m, 0, m.rows(), 0, a);
            Matrix right = submatrix(m, 0, m.rows(), b, m.cols());
            return hstack(left, right);
        };
        Matrix dm = dec.diff(d).matrix;
        Matrix a = submatrix(dm, j0, j1, l0, l1);
        Matrix b = drop_cols(submatrix(dm, j0, j1, 0, dm.cols()), l0, l1);
        Matrix c = drop_rows(submatrix(dm, 0, dm.rows(), l0, l1), j0, j1);
        Matrix e = drop_rows(drop_cols(dm, l0, l1), j0, j1);
        Matrix ainv = *inverse(a);

        std::vector<ModulePtr> v2 = s.slots, w2 = t.slots;
        v2.erase(v2.begin() + found_l);
        w2.erase(w2.begin() + found_j);
        ModulePtr nsrc = v2.empty() ? Module::zero(x0.algebra()) : direct_sum(v2).module;
        ModulePtr ndst = w2.empty() ? Module::zero(x0.algebra()) : direct_sum(w2).module;

        std::vector<ModulePtr> nterms;
        std::vector<ModuleMap> ndiffs;
        for (int dd = dec.lo(); dd <= dec.hi(); ++dd) {
            if (dd == d)
                nterms.push_back(nsrc);
            else if (dd == d + 1)
                nterms.push_back(ndst);
            else
                nterms.push_back(dec.term(dd));
        }
        for (int dd = dec.lo(); dd < dec.hi(); ++dd) {
            Matrix m = dec.diff(dd).matrix;
            if (dd == d - 1) m = drop_rows(m, l0, l1);
            if (dd == d) m = e - c * ainv * b;
            if (dd == d + 1) m = drop_cols(m, j0, j1);
            ndiffs.emplace_back(nterms[dd - dec.lo()], nterms[dd - dec.lo() + 1], m, false);
        }
        BoundedComplex reduced(x0.algebra(), dec.lo(), nterms, ndiffs, false);

        // chain maps of the cancellation
        std::map<int, Matrix> fcomps, gcomps;
        for (int dd = dec.lo(); dd <= dec.hi(); ++dd) {
            int n_old = dec.term(dd)->dim(), n_new = reduced.term(dd)->dim();
            if (n_old == 0 && n_new == 0) continue;
            if (dd == d) {
                // f = projection dropping slot l; g = [-ainv b; id] embedding
                Matrix f(fs, n_new, n_old);
                int r = 0;
                for (int cidx = 0; cidx < n_old; ++cidx) {
                    if (cidx >= l0 && cidx < l1) continue;
                    f.set_int(r++, cidx, 1);
                }
                fcomps[dd] = f;
                Matrix g(fs, n_old, n_new);
                Matrix top = -(ainv * b); // slot-l coordinates
                for (int rr = 0; rr < l1 - l0; ++rr)
                    for (int cc = 0; cc < n_new; ++cc) g.set(l0 + rr, cc, top.at(rr, cc));
                int r2 = 0;
                for (int rr = 0; rr < n_old; ++rr) {
                    if (rr >= l0 && rr < l1) continue;
                    g.set_int(rr, r2++, 1);
                }
                gcomps[dd] = g;
            } else if (dd == d + 1) {
                // f = [-c ainv, id] with the j rows removed; g = embedding
                Matrix f(fs, n_new, n_old);
                Matrix left = -(c * ainv); // (n_new) x (j1-j0)
                for (int rr = 0; rr < n_new; ++rr)
                    for (int cc = 0; cc < j1 - j0; ++cc) f.set(rr, j0 + cc, left.at(rr, cc));
                int r = 0;
                for (int cidx = 0; cidx < n_old; ++cidx) {
                    if (cidx >= j0 && cidx < j1) continue;
                    f.set(r, cidx, f.at(r, cidx) + Scalar::one(fs));
                    ++r;
                }
                fcomps[dd] = f;
                Matrix g(fs, n_old, n_new);
                int r2 = 0;
                for (int rr = 0; rr < n_old; ++rr) {
                    if (rr >= j0 && rr < j1) continue;
                    g.set_int(rr, r2++, 1);
                }
                gcomps[dd] = g;
            } else {
                if (n_old > 0) {
                    fcomps[dd] = Matrix::identity(fs, n_old);
                    gcomps[dd] = Matrix::identity(fs, n_old);
                }
            }
        }
        ChainMap fstep(dec, reduced, fcomps, false);
        ChainMap gstep(reduced, dec, gcomps, false);

        to_min = compose(fstep, compose(iso_fwd, to_min));
        from_min = compose(from_min, compose(iso_bwd, gstep));
        cur = reduced.trimmed();
        to_min = ChainMap(x0, cur, to_min.comps, false);
        from_min = ChainMap(cur, x0, from_min.comps, false);
    }

    check(to_min.commutes() && from_min.commutes(), Errc::Internal,
          "minimization witnesses are not chain maps");
    // exact section: to_min o from_min = id on the minimal model
    ChainMap round = compose(to_min, from_min);
    for (int d = cur.lo(); d <= cur.hi(); ++d) {
        if (cur.term(d)->dim() == 0) continue;
        check(round.comp(d) == Matrix::identity(fs, cur.term(d)->dim()), Errc::Internal,
              "minimization section failed");
    }
    return {cur, to_min, from_min};
}

} // namespace heartbox
