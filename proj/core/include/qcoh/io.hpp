#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qcoh/classify.hpp"
#include "qcoh/complex.hpp"
#include "qcoh/sheaf.hpp"

/// JSON description formats. Polynomials are written as maps from decimal exponents
/// to coefficient strings, and object keys come out sorted, so equal objects
/// serialize to identical bytes.
namespace qcoh::io {

using Json = nlohmann::json;

/// Parses text such as "3x^2 - 1/2x^-1 + 4" (a '*' between coefficient and x is allowed).
/// Throws Parse, or RingMismatch when an exponent is not allowed in `ring`.
Poly parse_poly(Ring ring, Field field, std::string_view text);

Json to_json(const Poly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const FpModule& m);
Json to_json(const QcohSheaf& F);
Json to_json(const SheafMorphism& f);
Json to_json(const BoundedComplex& C);
Json to_json(const StructureReport& r);

/// Polynomial given as an object {"exponent": "coefficient"}, a string such as "x^2 - 1", or an integer.
Poly parse_poly(const Json& j, Ring ring, Field field, const std::string& path);
/// Row-major nested arrays with exactly `rows` rows (and `cols` columns when given).
PolyMatrix parse_matrix(const Json& j, Ring ring, Field field, const std::string& path, std::size_t rows,
                        std::optional<std::size_t> cols = std::nullopt);
SheafPresentation parse_sheaf(const Json& j, Field field, const std::string& path = "");
/// Matrices in the generator coordinates of the two presentations.
SheafMorphism parse_morphism(const Json& j, const SheafPresentation& source, const SheafPresentation& target,
                             const std::string& path = "");
BoundedComplex parse_complex(const Json& j, Field field, const std::string& path = "");

/// Reads and parses a JSON file; errors name the file and the byte offset.
Json load_file(const std::string& filename);

}  // namespace qcoh::io
