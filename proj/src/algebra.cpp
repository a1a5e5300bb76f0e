#include "heartbox/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace heartbox {

namespace {

// ---- scalar polynomials, low degree first ----------------------------------

using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Scalar poly_eval(const Poly& p, const Scalar& x) {
    Scalar acc = Scalar::zero(x.field());
    for (int i = poly_deg(p); i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

Poly poly_mul(const Poly& a, const Poly& b, const FieldSpec& fs) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar::zero(fs));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return poly_trim(r);
}

Poly poly_make_monic(Poly p) {
    p = poly_trim(std::move(p));
    if (p.empty()) return p;
    Scalar c = p.back().inv();
    for (auto& v : p) v = v * c;
    return p;
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m) {
    a = poly_trim(std::move(a));
    int dm = poly_deg(m);
    while (poly_deg(a) >= dm) {
        Scalar lead = a.back();
        int shift = poly_deg(a) - dm;
        for (int i = 0; i <= dm; ++i) a[i + shift] = a[i + shift] - lead * m[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_make_monic(std::move(a));
    b = poly_make_monic(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = poly_make_monic(std::move(r));
    }
    return a;
}

Poly poly_div_exact(const Poly& num, const Poly& den, const FieldSpec& fs) {
    Poly rem = num;
    int dd = poly_deg(den);
    Poly q(std::max<std::size_t>(1, num.size() - den.size() + 1), Scalar::zero(fs));
    Scalar lead_inv = den.back().inv();
    while (poly_deg(rem) >= dd) {
        Scalar lead = rem.back() * lead_inv;
        int shift = poly_deg(rem) - dd;
        q[shift] = q[shift] + lead;
        for (int i = 0; i <= dd; ++i) rem[i + shift] = rem[i + shift] - lead * den[i];
        rem = poly_trim(std::move(rem));
    }
    return poly_trim(std::move(q));
}

// (x + c)^e mod m, monic m; used by the equal-degree split over GF(p).
Poly poly_powmod_linear(const Scalar& c, std::uint64_t e, const Poly& m, const FieldSpec& fs) {
    Poly base = poly_mod({c, Scalar::one(fs)}, m);
    Poly acc = {Scalar::one(fs)};
    while (e) {
        if (e & 1) acc = poly_mod(poly_mul(acc, base, fs), m);
        base = poly_mod(poly_mul(base, base, fs), m);
        e >>= 1;
    }
    return acc;
}

std::vector<mpz_class> small_divisors(const mpz_class& n0) {
    // Divisors by trial division; gives up quietly past the bound, which only
    // narrows the root search (callers fall back to SplitFailure).
    std::vector<mpz_class> divs{1};
    mpz_class n = abs(n0);
    if (n == 0) return divs;
    std::vector<std::pair<mpz_class, int>> fact;
    mpz_class d = 2;
    int guard = 0;
    while (n > 1 && d * d <= n && guard < 2000000) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            fact.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
        ++guard;
    }
    if (n > 1) fact.emplace_back(n, 1);
    for (auto& [pf, e] : fact) {
        std::size_t count = divs.size();
        mpz_class pw = 1;
        for (int t = 1; t <= e; ++t) {
            pw *= pf;
            for (std::size_t s = 0; s < count; ++s) divs.push_back(divs[s] * pw);
        }
    }
    return divs;
}

} // namespace

std::vector<Scalar> polynomial_roots_in_field(const std::vector<Scalar>& poly_in) {
    Poly g = poly_trim(poly_in);
    if (g.empty() || poly_deg(g) == 0) return {};
    const FieldSpec fs = g[0].field();
    std::vector<Scalar> roots;

    if (fs.is_fp()) {
        const std::uint64_t p = fs.p;
        if (p <= 4096) {
            for (std::uint64_t v = 0; v < p; ++v) {
                Scalar x(fs, v);
                if (poly_eval(g, x).is_zero()) roots.push_back(x);
            }
            return roots;
        }
        // Large p: keep the part that splits into linear factors, then a
        // deterministic Cantor-Zassenhaus shift sweep.
        g = poly_make_monic(std::move(g));
        Poly xp = poly_powmod_linear(Scalar::zero(fs), p, g, fs); // x^p mod g
        Poly xpmx = xp;
        if (xpmx.size() < 2) xpmx.resize(2, Scalar::zero(fs));
        xpmx[1] = xpmx[1] - Scalar::one(fs);
        Poly lin = poly_gcd(g, poly_trim(std::move(xpmx)));
        std::vector<Poly> stack{lin};
        Barrett br(p);
        while (!stack.empty()) {
            Poly h = poly_make_monic(stack.back());
            stack.pop_back();
            if (poly_deg(h) <= 0) continue;
            if (poly_deg(h) == 1) {
                roots.push_back(-h[0]);
                continue;
            }
            if (h[0].is_zero()) {
                roots.push_back(Scalar::zero(fs));
                stack.push_back(Poly(h.begin() + 1, h.end()));
                continue;
            }
            bool split = false;
            for (std::uint64_t c = 0; c < 256 && !split; ++c) {
                Poly w = poly_powmod_linear(Scalar(fs, c), (p - 1) / 2, h, fs);
                if (w.empty())
                    w = {Scalar(fs, br.neg(1))};
                else
                    w[0] = w[0] - Scalar::one(fs);
                Poly d1 = poly_gcd(h, w);
                if (poly_deg(d1) > 0 && poly_deg(d1) < poly_deg(h)) {
                    stack.push_back(d1);
                    stack.push_back(poly_div_exact(h, d1, fs));
                    split = true;
                }
            }
            if (!split) break; // give up; callers treat missing roots as non-split
        }
        std::sort(roots.begin(), roots.end(),
                  [](const Scalar& a, const Scalar& b) { return a.fp() < b.fp(); });
        return roots;
    }

    // Q: rational root theorem after clearing denominators.
    mpz_class l(1);
    for (const auto& c : g) l = lcm(l, c.q().get_den());
    std::vector<mpz_class> zc;
    for (const auto& c : g) zc.push_back(mpq_class(c.q() * mpq_class(l)).get_num());
    int lo = 0;
    while (lo < static_cast<int>(zc.size()) && zc[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(Scalar::zero(fs));
    if (lo >= static_cast<int>(zc.size()) - 1) return roots;
    auto nums = small_divisors(zc[lo]);
    auto dens = small_divisors(zc.back());
    std::vector<mpq_class> cands;
    for (const auto& n : nums)
        for (const auto& den : dens) {
            mpq_class r(n, den);
            r.canonicalize();
            cands.push_back(r);
            cands.push_back(-r);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands)
        if (poly_eval(g, Scalar(fs, r)).is_zero()) roots.push_back(Scalar(fs, r));
    return roots;
}

// ---- Algebra -----------------------------------------------------------------

Algebra::Algebra(std::string name, FieldSpec field, std::vector<std::string> basis_labels,
                 std::vector<MulEntry> mul, std::vector<Scalar> unit)
    : name_(std::move(name)), field_(field), dim_(static_cast<int>(basis_labels.size())),
      labels_(std::move(basis_labels)), mul_(std::move(mul)) {
    check(dim_ > 0, Errc::BadInput, "algebra must have positive dimension");
    check(static_cast<int>(unit.size()) == dim_, Errc::BadInput, "unit vector has wrong length");
    unit_ = Matrix(field_, dim_, 1);
    for (int i = 0; i < dim_; ++i) unit_.set(i, 0, unit[i]);
    left_.assign(dim_, Matrix(field_, dim_, dim_));
    for (const auto& e : mul_) {
        check(0 <= e.i && e.i < dim_ && 0 <= e.j && e.j < dim_ && 0 <= e.k && e.k < dim_,
              Errc::BadInput, "structure constant index out of range");
        left_[e.i].set(e.k, e.j, left_[e.i].at(e.k, e.j) + e.c);
    }
    compute_generators();
}

Matrix Algebra::basis_vector(int i) const {
    Matrix v(field_, dim_, 1);
    v.set_int(i, 0, 1);
    return v;
}

Matrix Algebra::left_mult_of(const Matrix& x) const {
    Matrix r(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        Scalar xi = x.at(i, 0);
        if (xi.is_zero()) continue;
        r = r + left_[i].scaled(xi);
    }
    return r;
}

Matrix Algebra::right_mult_of(const Matrix& y) const {
    // column i of R(y) = e_i * y
    Matrix r(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        Matrix col = left_[i] * y;
        for (int k = 0; k < dim_; ++k) r.set(k, i, col.at(k, 0));
    }
    return r;
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const { return left_mult_of(x) * y; }

bool Algebra::is_commutative() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (!(left_[i] * basis_vector(j) == left_[j] * basis_vector(i))) return false;
    return true;
}

void Algebra::compute_generators() {
    // Greedy: grow a generator set until the unital closure is everything.
    auto closure_of = [&](const std::vector<int>& gens) {
        Matrix span = unit_;
        for (int g : gens) span = hstack(span, basis_vector(g));
        span = column_space_basis(span);
        for (;;) {
            Matrix prods = span;
            for (int g : gens) prods = hstack(prods, left_[g] * span);
            Matrix bigger = column_space_basis(prods);
            if (bigger.cols() == span.cols()) return span;
            span = bigger;
        }
    };
    std::vector<int> gens;
    Matrix span = closure_of(gens);
    for (int i = 0; i < dim_ && span.cols() < dim_; ++i) {
        if (in_column_space(span, basis_vector(i))) continue;
        gens.push_back(i);
        span = closure_of(gens);
    }
    gens_ = gens;
}

ValidationReport validate(const Algebra& a) {
    const int d = a.dim();
    for (int i = 0; i < d; ++i) {
        if (!(a.multiply(a.unit(), a.basis_vector(i)) == a.basis_vector(i)))
            return {false, "UnitLawFails: 1*e_" + std::to_string(i)};
        if (!(a.multiply(a.basis_vector(i), a.unit()) == a.basis_vector(i)))
            return {false, "UnitLawFails: e_" + std::to_string(i) + "*1"};
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Matrix eij = a.left_mult(i) * a.basis_vector(j);
            for (int k = 0; k < d; ++k) {
                Matrix lhs = a.multiply(eij, a.basis_vector(k));
                Matrix rhs = a.multiply(a.basis_vector(i), a.left_mult(j) * a.basis_vector(k));
                if (!(lhs == rhs))
                    return {false, "NotAssociative(" + std::to_string(i) + "," + std::to_string(j) +
                                       "," + std::to_string(k) + ")"};
            }
        }
    return {true, ""};
}

void validate_or_throw(const Algebra& a) {
    ValidationReport r = validate(a);
    if (!r.ok) {
        Errc code =
            r.message.rfind("UnitLawFails", 0) == 0 ? Errc::UnitLawFails : Errc::NotAssociative;
        fail(code, a.name() + ": " + r.message);
    }
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    std::vector<Algebra::MulEntry> flipped;
    flipped.reserve(a->mul_entries().size());
    for (const auto& e : a->mul_entries()) flipped.push_back({e.j, e.i, e.k, e.c});
    std::vector<Scalar> unit;
    for (int i = 0; i < a->dim(); ++i) unit.push_back(a->unit().at(i, 0));
    return std::make_shared<Algebra>(a->name() + "^op", a->field(), a->basis_labels(),
                                     std::move(flipped), std::move(unit));
}

namespace {

Scalar trace_of_product(const Matrix& x, const Matrix& y) {
    Scalar t = Scalar::zero(x.field());
    for (int s = 0; s < x.rows(); ++s)
        for (int u = 0; u < x.cols(); ++u) {
            Scalar a = x.at(s, u);
            if (a.is_zero()) continue;
            t = t + a * y.at(u, s);
        }
    return t;
}

} // namespace

SubspaceBasis jacobson_radical(const AlgebraPtr& a) {
    const int d = a->dim();
    if (a->field().is_fp())
        check(a->field().p > static_cast<std::uint64_t>(d), Errc::CharTooSmall,
              "trace criterion needs p > dim: p=" + std::to_string(a->field().p) +
                  ", dim=" + std::to_string(d));
    Matrix gram(a->field(), d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gram.set(i, j, trace_of_product(a->left_mult(i), a->left_mult(j)));
    Matrix rad = kernel_basis(gram);

    // Two-sided ideal check.
    for (int c = 0; c < rad.cols(); ++c) {
        Matrix r = submatrix(rad, 0, d, c, c + 1);
        for (int i = 0; i < d; ++i) {
            check(in_column_space(rad, a->multiply(a->basis_vector(i), r)), Errc::Internal,
                  "radical is not a left ideal");
            check(in_column_space(rad, a->multiply(r, a->basis_vector(i))), Errc::Internal,
                  "radical is not a right ideal");
        }
    }
    // Nilpotency: powers of the subspace must reach zero.
    Matrix power = rad;
    for (int iter = 0; power.cols() > 0; ++iter) {
        check(iter <= d, Errc::Internal, "radical candidate is not nilpotent");
        Matrix prods(a->field(), d, 0);
        for (int u = 0; u < power.cols(); ++u)
            for (int v = 0; v < rad.cols(); ++v)
                prods = hstack(prods, a->multiply(submatrix(power, 0, d, u, u + 1),
                                                  submatrix(rad, 0, d, v, v + 1)));
        power = column_space_basis(prods);
    }
    // Semisimple quotient: the trace form downstairs is nondegenerate.
    if (rad.cols() > 0) {
        QuotientAlgebra q = quotient_by_ideal(a, rad);
        const int qd = q.algebra->dim();
        Matrix qgram(a->field(), qd, qd);
        for (int i = 0; i < qd; ++i)
            for (int j = 0; j < qd; ++j)
                qgram.set(i, j,
                          trace_of_product(q.algebra->left_mult(i), q.algebra->left_mult(j)));
        check(kernel_basis(qgram).cols() == 0, Errc::Internal, "quotient by radical not semisimple");
    }
    return SubspaceBasis{a, rad};
}

QuotientAlgebra quotient_by_ideal(const AlgebraPtr& a, const Matrix& ideal_cols) {
    const int d = a->dim();
    const int u = ideal_cols.cols();
    check(u < d, Errc::BadInput, "ideal is the whole algebra");
    Matrix comp = complement_basis(ideal_cols, d);
    Matrix t = u == 0 ? comp : hstack(ideal_cols, comp);
    auto tinv = inverse(t);
    check(tinv.has_value(), Errc::Internal, "ideal basis not independent");
    Matrix proj = submatrix(*tinv, u, d, 0, d);
    const int qd = d - u;

    std::vector<Algebra::MulEntry> mul;
    for (int i = 0; i < qd; ++i) {
        Matrix bi = submatrix(comp, 0, d, i, i + 1);
        for (int j = 0; j < qd; ++j) {
            Matrix bj = submatrix(comp, 0, d, j, j + 1);
            Matrix prod = proj * a->multiply(bi, bj);
            for (int k = 0; k < qd; ++k) {
                Scalar c = prod.at(k, 0);
                if (!c.is_zero()) mul.push_back({i, j, k, c});
            }
        }
    }
    Matrix unit_q = proj * a->unit();
    std::vector<Scalar> unit;
    std::vector<std::string> labels;
    for (int i = 0; i < qd; ++i) {
        unit.push_back(unit_q.at(i, 0));
        labels.push_back("q" + std::to_string(i));
    }
    auto alg = std::make_shared<Algebra>(a->name() + "/rad", a->field(), labels, std::move(mul),
                                         std::move(unit));
    return QuotientAlgebra{alg, proj, comp};
}

CornerAlgebra subalgebra_on(const AlgebraPtr& a, const Matrix& basis_cols,
                            const Matrix& unit_coords, const std::string& name) {
    const int d = a->dim();
    const int m = basis_cols.cols();
    std::vector<Algebra::MulEntry> mul;
    for (int i = 0; i < m; ++i) {
        Matrix bi = submatrix(basis_cols, 0, d, i, i + 1);
        for (int j = 0; j < m; ++j) {
            Matrix bj = submatrix(basis_cols, 0, d, j, j + 1);
            auto x = solve(basis_cols, a->multiply(bi, bj));
            check(x.has_value(), Errc::Internal, "subspace not closed under multiplication");
            for (int k = 0; k < m; ++k) {
                Scalar c = x->at(k, 0);
                if (!c.is_zero()) mul.push_back({i, j, k, c});
            }
        }
    }
    auto ucoords = solve(basis_cols, unit_coords);
    check(ucoords.has_value(), Errc::Internal, "unit not inside subalgebra");
    std::vector<Scalar> unit;
    std::vector<std::string> labels;
    for (int k = 0; k < m; ++k) {
        unit.push_back(ucoords->at(k, 0));
        labels.push_back("s" + std::to_string(k));
    }
    auto alg = std::make_shared<Algebra>(name, a->field(), labels, std::move(mul), std::move(unit));
    return CornerAlgebra{alg, basis_cols};
}

std::vector<Scalar> minimal_polynomial(const AlgebraPtr& a, const Matrix& x) {
    const int d = a->dim();
    Matrix pow = a->unit();
    Matrix krylov = pow;
    for (int deg = 1; deg <= d; ++deg) {
        pow = a->multiply(x, pow);
        Matrix k = kernel_basis(hstack(krylov, pow));
        if (k.cols() > 0) {
            std::vector<Scalar> coeffs;
            Scalar lead = k.at(deg, k.cols() - 1);
            check(!lead.is_zero(), Errc::Internal, "krylov dependence malformed");
            Scalar inv = lead.inv();
            for (int i = 0; i <= deg; ++i) coeffs.push_back(k.at(i, k.cols() - 1) * inv);
            return coeffs;
        }
        krylov = hstack(krylov, pow);
    }
    fail(Errc::Internal, "minimal polynomial not found within dim bound");
}

namespace {

// Splitting of semisimple algebras into primitive idempotents. Candidates are
// searched deterministically; anything that cannot be split over the base
// field raises SplitFailure.

std::vector<Matrix> candidate_elements(const AlgebraPtr& s) {
    std::vector<Matrix> out;
    const int d = s->dim();
    for (int i = 0; i < d; ++i) out.push_back(s->basis_vector(i));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) out.push_back(s->basis_vector(i) + s->basis_vector(j));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            out.push_back(s->multiply(s->basis_vector(i), s->basis_vector(j)));
        }
    return out;
}

std::vector<Matrix> split_semisimple(const AlgebraPtr& s);

std::vector<Matrix> split_via_corners(const AlgebraPtr& s, const Matrix& e) {
    const int d = s->dim();
    Matrix f = s->unit() - e;
    std::vector<Matrix> result;
    for (const Matrix& idem : {e, f}) {
        if (idem.is_zero()) continue;
        Matrix cols(s->field(), d, 0);
        for (int i = 0; i < d; ++i)
            cols = hstack(cols, s->multiply(idem, s->multiply(s->basis_vector(i), idem)));
        Matrix basis = column_space_basis(cols);
        CornerAlgebra corner = subalgebra_on(s, basis, idem, s->name() + "#corner");
        for (const Matrix& q : split_semisimple(corner.algebra)) result.push_back(basis * q);
    }
    return result;
}

std::vector<Matrix> split_semisimple(const AlgebraPtr& s) {
    const int d = s->dim();
    if (d == 1) return {s->unit()};

    for (const Matrix& u : candidate_elements(s)) {
        std::vector<Scalar> mp = minimal_polynomial(s, u);
        if (static_cast<int>(mp.size()) - 1 < 2) continue;
        std::vector<Scalar> roots = polynomial_roots_in_field(mp);
        if (roots.empty()) continue;
        // v = u - lambda is a nonzero zero-divisor, so S*v is a proper ideal.
        Matrix v = u - s->unit().scaled(roots[0]);
        if (v.is_zero()) continue;
        Matrix lcols(s->field(), d, 0);
        for (int i = 0; i < d; ++i) lcols = hstack(lcols, s->multiply(s->basis_vector(i), v));
        Matrix lbasis = column_space_basis(lcols);
        if (lbasis.cols() == 0 || lbasis.cols() == d) continue;
        // Idempotent right identity of the ideal: x*e = x for x in basis(L).
        const int m = lbasis.cols();
        Matrix sys(s->field(), d * m, m);
        Matrix rhs(s->field(), d * m, 1);
        for (int r = 0; r < m; ++r) {
            Matrix x = submatrix(lbasis, 0, d, r, r + 1);
            Matrix block = s->left_mult_of(x) * lbasis; // columns x * l_j
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < m; ++j) sys.set(r * d + i, j, block.at(i, j));
                rhs.set(r * d + i, 0, x.at(i, 0));
            }
        }
        auto sol = solve(sys, rhs);
        if (!sol) continue;
        Matrix e = lbasis * *sol;
        if (e.is_zero() || e == s->unit()) continue;
        check(s->multiply(e, e) == e, Errc::Internal, "ideal right identity not idempotent");
        return split_via_corners(s, e);
    }
    fail(Errc::SplitFailure,
         s->name() + ": semisimple factor of dim " + std::to_string(d) +
             " admits no splitting element over " + s->field().to_string() +
             " (field extension or division algebra; pass a splitting field)");
}

} // namespace

std::vector<Matrix> primitive_idempotents(const AlgebraPtr& a) {
    SubspaceBasis rad = jacobson_radical(a);
    const int d = a->dim();

    if (rad.dim() == 0) return split_semisimple(a);

    QuotientAlgebra q = quotient_by_ideal(a, rad.columns);
    std::vector<Matrix> prims_bar;
    for (const Matrix& e : split_semisimple(q.algebra)) prims_bar.push_back(q.section * e);

    // Sequential lift inside the corner (1-f) a (1-f) of what is left.
    std::vector<Matrix> lifted;
    Matrix f(a->field(), d, 1);
    const int m = static_cast<int>(prims_bar.size());
    for (int t = 0; t + 1 < m; ++t) {
        Matrix onemf = a->unit() - f;
        Matrix e = a->multiply(onemf, a->multiply(prims_bar[t], onemf));
        // Newton step e <- 3e^2 - 2e^3 squares the radical-error each round.
        for (int it = 0;; ++it) {
            Matrix e2 = a->multiply(e, e);
            if (e2 == e) break;
            check(it <= d + 2, Errc::Internal, "idempotent lifting did not converge");
            Matrix e3 = a->multiply(e2, e);
            e = e2.scaled(Scalar::from_int(a->field(), 3)) -
                e3.scaled(Scalar::from_int(a->field(), 2));
        }
        check(!e.is_zero(), Errc::Internal, "lifted idempotent vanished");
        lifted.push_back(e);
        f = f + e;
    }
    Matrix last = a->unit() - f;
    check(a->multiply(last, last) == last, Errc::Internal, "residual idempotent check failed");
    check(!last.is_zero(), Errc::Internal, "residual idempotent vanished");
    lifted.push_back(last);
    return lifted;
}

} // namespace heartbox
