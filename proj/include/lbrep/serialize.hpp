#pragma once

/**
 * JSON and LaTeX forms of library objects. Every top-level JSON document
 * carries "schema": 1.
 */

#include "lbrep/completion.hpp"
#include "lbrep/homology.hpp"
#include "lbrep/matrix.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <string_view>

namespace lbrep {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// [{"exponents": [..], "coeff": "..."}, ...] in term order.
Json element_to_json(const GroupRingElement& a);
GroupRingElement element_from_json(const Context& context, const Json& j);

/// Rows of canonical-text entries.
Json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const Context& context, const Json& j);

/// {"finite": [...], "rays": [{"base", "step", "pattern", "direction"}]}.
Json completed_to_json(const CompletedElement& c);
CompletedElement completed_from_json(const Context& context, const Json& j);

/// A chain complex file: {"schema": 1, "coefficients": "integers",
/// "variables": ["x"], "grading": "homological", "ranks": [1, 1],
/// "maps": [[["1 - x"]]]}.
FiniteChainComplex complex_from_json(const Json& j);
Json complex_to_json(const FiniteChainComplex& c);

/// LaTeX of one element, e.g. "-2 x^{-1} d^{3} + 1".
std::string element_to_latex(const GroupRingElement& a);
/// A bare pmatrix environment.
std::string matrix_to_latex(const RingMatrix& m);

/// "x=2,d=-1" or "x=(0,1)" into values of the given ring. Commas inside
/// parentheses belong to the value.
std::map<std::string, Scalar> parse_assignments(std::string_view text, const CoefficientRing& ring);

}  // namespace lbrep
