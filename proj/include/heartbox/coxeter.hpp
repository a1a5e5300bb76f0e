#pragma once

#include "heartbox/exact.hpp"

namespace heartbox {

enum class CoxeterType { A1, A2, B2, A1xA1 };

CoxeterType coxeter_type_from_string(const std::string& s);
std::string coxeter_type_to_string(CoxeterType t);

struct CoxeterElement {
    std::vector<int> word; // one reduced word (letters = simple reflection indices)
    Matrix matrix;         // action on the chosen coordinates of h*
};

// A rank <= 2 crystallographic Weyl group acting on h*, with Bruhat order and
// the fundamental invariant data its coinvariant algebra needs.
struct CoxeterDatum {
    CoxeterType type;
    FieldSpec field;
    int rank = 0;
    std::vector<std::string> labels;       // "s", "t"
    std::vector<Matrix> reflections;       // rank x rank matrices on h*
    std::vector<Matrix> simple_roots;      // alpha_s as coordinate columns
    std::vector<CoxeterElement> elements;  // BFS by length, [0] = e
    std::vector<std::vector<bool>> bruhat; // bruhat[i][j]: elements[i] <= elements[j]
    int longest = 0;
    int num_positive_roots = 0;
    std::vector<int> invariant_degrees;

    int order() const { return static_cast<int>(elements.size()); }
    int element_index(const Matrix& m) const;
    int multiply(int i, int j) const;
    int word_to_element(const std::vector<int>& word) const;
    bool is_reduced(const std::vector<int>& word) const;
    int letter_index(const std::string& label) const;
};

CoxeterDatum make_coxeter(CoxeterType type, const FieldSpec& fs);

// Parse "s,t,s" into letter indices for the datum.
std::vector<int> parse_word(const CoxeterDatum& w, const std::string& text);

} // namespace heartbox
