#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "latcvx/certify.hpp"
#include "latcvx/constructions.hpp"

namespace latcvx::io {

using nlohmann::json;

/// Decimal convenience fields are added next to exact values when set.
struct OutputOptions {
  std::optional<int> decimal_digits;
};

/// Accepts "p/q" strings and JSON integers; rejects floats (ParseError).
Rational rational_from_json(const json& j);
json to_json(const Rational& r);
RatVector vector_from_json(const json& j);
json to_json(const RatVector& v);
/// Row-major list of rows.
RatMatrix matrix_from_json(const json& j);
json to_json(const RatMatrix& m);

/// {"dim", "vertices"} and/or {"dim", "inequalities": [{"normal", "offset"}]};
/// when both are given they must agree. A document with a "polytope" key is
/// unwrapped.
Polytope polytope_from_json(const json& j);
/// Both descriptions.
json to_json(const Polytope& p);

/// {"basis": [[...], ...]} (each inner list is one basis vector) with an
/// optional "gram", or {"basis": "identity", "dim": d}. A document with a
/// "lattice" key is unwrapped.
Lattice lattice_from_json(const json& j);
json to_json(const Lattice& l);
/// Only the Gram form: {"gram": [[...]]} (identity basis).
Lattice lattice_from_gram_json(const json& j);

json to_json(const FunctionalResult& r, const OutputOptions& opt = {});
json to_json(const ReducedCertificate& c, const OutputOptions& opt = {});
json to_json(const CompleteCertificate& c, const OutputOptions& opt = {});
json to_json(const TriangleClass& c);
json to_json(const GalleryEntry& e);
json to_json(const Facet& f);

/// {"polytope": ..., "lattice": ...}
json document(const Polytope& p, const Lattice& l);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
json read_file(const std::string& path);
/// Writes `j` (pretty-printed, trailing newline) to `path`, or stdout for "-".
void write_output(const json& j, const std::string& path);

}  // namespace latcvx::io
