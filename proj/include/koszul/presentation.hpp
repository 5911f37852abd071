#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "koszul/tensor.hpp"

namespace koszul {

/// N-homogeneous presentation T(V)/(R): generators, degree N, relations in V^{⊗N}.
struct Presentation {
    Field field;
    std::vector<std::string> generators;
    std::size_t degree = 2;
    std::vector<TensorElement> relations;
    std::vector<std::string> warnings;

    std::size_t g() const noexcept { return generators.size(); }
    /// Text form accepted by parse_presentation.
    std::string to_text() const;
};

/// Parses the line-oriented presentation format:
///   field Q | field F 7
///   generators x y
///   degree 3
///   rel 1*(y y x) + 2/3*(x x x) - (y x y)
/// Lines starting with '#' are comments. Throws ParseError with line and column.
Presentation parse_presentation(std::string_view text);

/// Checks generators, degree, relation shapes and char(k) not dividing N.
void validate(const Presentation& p);

Presentation truncated_polynomial(Field f, std::size_t n);
Presentation tensor_algebra(Field f, std::size_t g, std::size_t n);
Presentation full_relations(Field f, std::size_t g, std::size_t n);
Presentation as_cubic(Field f, const Scalar& a, const Scalar& b, const Scalar& c);

/// truncated:N | tensor:g,N | full:g,N | as_cubic:a,b,c | file:PATH
Presentation catalog(std::string_view name, Field f);

}  // namespace koszul
