#include "heartbox/fixtures.hpp"

namespace heartbox {

AlgebraPtr make_truncated_poly_algebra(const FieldSpec& fs, int n) {
    check(n >= 1, Errc::BadInput, "need n >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    std::vector<Algebra::MulEntry> mul;
    Scalar one = Scalar::one(fs);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) mul.push_back({i, j, i + j, one});
    std::vector<Scalar> unit(n, Scalar::zero(fs));
    unit[0] = one;
    std::string name = fs.is_fp() ? "GF(" + std::to_string(fs.p) + ")[x]/(x^" + std::to_string(n) + ")"
                                  : "Q[x]/(x^" + std::to_string(n) + ")";
    return std::make_shared<Algebra>(name, fs, labels, std::move(mul), std::move(unit));
}

AlgebraPtr make_diagonal_algebra(const FieldSpec& fs, int n) {
    check(n >= 1, Errc::BadInput, "need n >= 1");
    std::vector<std::string> labels;
    std::vector<Algebra::MulEntry> mul;
    Scalar one = Scalar::one(fs);
    for (int i = 0; i < n; ++i) {
        labels.push_back("c" + std::to_string(i));
        mul.push_back({i, i, i, one});
    }
    std::vector<Scalar> unit(n, one);
    return std::make_shared<Algebra>("diag^" + std::to_string(n), fs, labels, std::move(mul),
                                     std::move(unit));
}

NakayamaFixture make_nakayama_fixture(const FieldSpec& fs, int n) {
    NakayamaFixture fx;
    fx.algebra = make_truncated_poly_algebra(fs, n);
    validate_or_throw(*fx.algebra);
    for (int i = 1; i <= n; ++i) {
        // M_i = k[x]/(x^i): x acts by the nilpotent shift on 1, x, ..., x^{i-1}
        Matrix shift(fs, i, i);
        for (int j = 0; j + 1 < i; ++j) shift.set_int(j + 1, j, 1);
        std::vector<Matrix> action;
        Matrix pw = Matrix::identity(fs, i);
        for (int j = 0; j < n; ++j) {
            action.push_back(pw);
            pw = shift * pw;
        }
        fx.modules.push_back(Module::make(fx.algebra, std::move(action), "M" + std::to_string(i)));
    }
    register_indecomposable_catalog(fx.algebra, fx.modules);
    return fx;
}

A3Fixture make_a3_fixture(const FieldSpec& fs) {
    A3Fixture fx;
    fx.algebra = make_a3rad2_algebra(fs);
    validate_or_throw(*fx.algebra);
    auto simple = [&](int vertex) {
        std::vector<Matrix> action(5, Matrix(fs, 1, 1));
        action[vertex].set_int(0, 0, 1);
        return Module::make(fx.algebra, std::move(action), "S" + std::to_string(vertex + 1));
    };
    fx.s1 = simple(0);
    fx.s2 = simple(1);
    fx.s3 = simple(2);
    auto proj = [&](int top_vertex, const std::string& label) {
        // basis: generator at top_vertex, arrow image at top_vertex+1
        std::vector<Matrix> action(5, Matrix(fs, 2, 2));
        action[top_vertex].set_int(0, 0, 1);
        action[top_vertex + 1].set_int(1, 1, 1);
        action[3 + top_vertex].set_int(1, 0, 1); // the arrow out of top_vertex
        return Module::make(fx.algebra, std::move(action), label);
    };
    fx.p1 = proj(0, "P1");
    fx.p2 = proj(1, "P2");
    register_indecomposable_catalog(fx.algebra, fx.catalog());
    return fx;
}

AlgebraPtr make_a3rad2_algebra(const FieldSpec& fs) {
    // basis order: e1, e2, e3, a: 1->2, b: 2->3; product = path composition,
    // p*q means "q then p"; all length-two paths vanish.
    std::vector<std::string> labels = {"e1", "e2", "e3", "a", "b"};
    Scalar one = Scalar::one(fs);
    std::vector<Algebra::MulEntry> mul;
    for (int i = 0; i < 3; ++i) mul.push_back({i, i, i, one});
    // a = e2 * a * e1, b = e3 * b * e2
    mul.push_back({1, 3, 3, one}); // e2 * a = a
    mul.push_back({3, 0, 3, one}); // a * e1 = a
    mul.push_back({2, 4, 4, one}); // e3 * b = b
    mul.push_back({4, 1, 4, one}); // b * e2 = b
    std::vector<Scalar> unit = {one, one, one, Scalar::zero(fs), Scalar::zero(fs)};
    return std::make_shared<Algebra>(fs.is_fp() ? "A3rad2_F" + std::to_string(fs.p) : "A3rad2_Q", fs,
                                     labels, std::move(mul), std::move(unit));
}

} // namespace heartbox
