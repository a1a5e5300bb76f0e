#include "heartbox/coxeter.hpp"

#include <algorithm>
#include <sstream>

namespace heartbox {

CoxeterType coxeter_type_from_string(const std::string& s) {
    if (s == "A1") return CoxeterType::A1;
    if (s == "A2") return CoxeterType::A2;
    if (s == "B2") return CoxeterType::B2;
    if (s == "A1xA1") return CoxeterType::A1xA1;
    fail(Errc::BadInput, "unknown Coxeter type '" + s + "' (A1, A2, B2, A1xA1)");
}

std::string coxeter_type_to_string(CoxeterType t) {
    switch (t) {
        case CoxeterType::A1: return "A1";
        case CoxeterType::A2: return "A2";
        case CoxeterType::B2: return "B2";
        case CoxeterType::A1xA1: return "A1xA1";
    }
    return "?";
}

int CoxeterDatum::element_index(const Matrix& m) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].matrix == m) return static_cast<int>(i);
    fail(Errc::Internal, "matrix not in the Weyl group");
}

int CoxeterDatum::multiply(int i, int j) const {
    return element_index(elements[i].matrix * elements[j].matrix);
}

int CoxeterDatum::word_to_element(const std::vector<int>& word) const {
    Matrix m = Matrix::identity(field, rank);
    for (int letter : word) m = m * reflections[letter];
    return element_index(m);
}

bool CoxeterDatum::is_reduced(const std::vector<int>& word) const {
    int e = word_to_element(word);
    return static_cast<int>(word.size()) == static_cast<int>(elements[e].word.size());
}

int CoxeterDatum::letter_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    fail(Errc::BadInput, "unknown simple reflection '" + label + "'");
}

CoxeterDatum make_coxeter(CoxeterType type, const FieldSpec& fs) {
    CoxeterDatum w;
    w.type = type;
    w.field = fs;
    auto mat = [&](std::vector<std::vector<long long>> rows) {
        return Matrix::from_int_rows(fs, std::move(rows));
    };
    auto col = [&](std::vector<long long> entries) {
        Matrix c(fs, static_cast<int>(entries.size()), 1);
        for (std::size_t i = 0; i < entries.size(); ++i)
            c.set_int(static_cast<int>(i), 0, entries[i]);
        return c;
    };
    switch (type) {
        case CoxeterType::A1:
            w.rank = 1;
            w.labels = {"s"};
            w.reflections = {mat({{-1}})};
            w.simple_roots = {col({1})};
            w.num_positive_roots = 1;
            w.invariant_degrees = {2};
            break;
        case CoxeterType::A1xA1:
            w.rank = 2;
            w.labels = {"s", "t"};
            w.reflections = {mat({{-1, 0}, {0, 1}}), mat({{1, 0}, {0, -1}})};
            w.simple_roots = {col({1, 0}), col({0, 1})};
            w.num_positive_roots = 2;
            w.invariant_degrees = {2, 2};
            break;
        case CoxeterType::A2:
            // coordinates y1, y2 with x = (y1, y2, -y1-y2) in the sum-zero plane
            w.rank = 2;
            w.labels = {"s", "t"};
            w.reflections = {mat({{0, 1}, {1, 0}}), mat({{1, -1}, {0, -1}})};
            w.simple_roots = {col({1, -1}), col({1, 2})};
            w.num_positive_roots = 3;
            w.invariant_degrees = {2, 3};
            break;
        case CoxeterType::B2:
            // y1, y2 standard; s swaps, t negates y2
            w.rank = 2;
            w.labels = {"s", "t"};
            w.reflections = {mat({{0, 1}, {1, 0}}), mat({{1, 0}, {0, -1}})};
            w.simple_roots = {col({1, -1}), col({0, 1})};
            w.num_positive_roots = 4;
            w.invariant_degrees = {2, 4};
            break;
    }
    // Sanity: each reflection fixes a hyperplane and negates its root.
    for (std::size_t i = 0; i < w.reflections.size(); ++i) {
        check(w.reflections[i] * w.simple_roots[i] == -w.simple_roots[i], Errc::Internal,
              "reflection does not negate its root");
        check(w.reflections[i] * w.reflections[i] == Matrix::identity(fs, w.rank), Errc::Internal,
              "reflection is not an involution");
    }

    // BFS enumeration by word length gives one reduced word per element.
    w.elements.push_back({{}, Matrix::identity(fs, w.rank)});
    std::size_t frontier_begin = 0;
    while (frontier_begin < w.elements.size()) {
        std::size_t frontier_end = w.elements.size();
        for (std::size_t t = frontier_begin; t < frontier_end; ++t) {
            for (int s = 0; s < static_cast<int>(w.reflections.size()); ++s) {
                Matrix m = w.reflections[s] * w.elements[t].matrix;
                bool seen = false;
                for (const auto& e : w.elements)
                    if (e.matrix == m) { seen = true; break; }
                if (!seen) {
                    std::vector<int> word = {s};
                    word.insert(word.end(), w.elements[t].word.begin(), w.elements[t].word.end());
                    w.elements.push_back({word, m});
                }
            }
        }
        if (w.elements.size() == frontier_end) break;
        frontier_begin = frontier_end;
    }
    int expected = type == CoxeterType::A1 ? 2 : (type == CoxeterType::A2 ? 6 : (type == CoxeterType::B2 ? 8 : 4));
    check(w.order() == expected, Errc::Internal, "Weyl group has wrong order");
    w.longest = 0;
    for (int i = 0; i < w.order(); ++i)
        if (w.elements[i].word.size() > w.elements[w.longest].word.size()) w.longest = i;

    // Bruhat order by the subword property on the chosen reduced words.
    const int n = w.order();
    w.bruhat.assign(n, std::vector<bool>(n, false));
    for (int j = 0; j < n; ++j) {
        const auto& word = w.elements[j].word;
        const int len = static_cast<int>(word.size());
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<int> sub;
            for (int b = 0; b < len; ++b)
                if (mask & (1 << b)) sub.push_back(word[b]);
            w.bruhat[w.word_to_element(sub)][j] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            check(!(w.bruhat[i][j] && w.bruhat[j][i]) || i == j, Errc::Internal,
                  "Bruhat order is not antisymmetric");
    return w;
}

std::vector<int> parse_word(const CoxeterDatum& w, const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim spaces
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(w.letter_index(item));
    }
    return out;
}

} // namespace heartbox
