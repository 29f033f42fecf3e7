#ifndef TORIC_JSON_IO_HPP
#define TORIC_JSON_IO_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/toric_complexes.hpp"
#include "toric/verifier.hpp"

namespace toric {

/// Key order is preserved on output; builders below insert keys
/// alphabetically so every serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

/// Integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; the parsers accept both spellings.
Json int_to_json(const Int& value);
Int int_from_json(const Json& j);

/// {"rank": n, "rays": [[...], ...]}, one array per generating ray.
/// Non-primitive rays are scaled down to primitive with a note on
/// `warnings`; zero rays are rejected as malformed input.
Cone cone_from_json(const Json& j, std::ostream* warnings = nullptr);

/// {"max_cones": [[...], ...], "rank": n, "rays": [[...], ...]} with
/// 1-based ray indices in max_cones. Structural checks only; whether the
/// fan refines a cone is decided by validate_refinement.
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan);

Json profile_to_json(const Cone& cone);
Json refinement_to_json(const RefinementProfile& profile);
Json table_to_json(const GradedCohomologyTable& table);
/// Render of one degreewise complex: term dimensions and cohomology.
Json complex_to_json(const FiniteComplex& complex, ComplexKind kind, int p,
                     const IntVector& degree,
                     const std::vector<Index>& support);
Json report_to_json(const VerificationReport& report);
Json error_to_json(const Error& error);

std::string format_table_text(const GradedCohomologyTable& table);

/// dump(2) plus a trailing newline; the one true output form.
std::string dump_json(const Json& j);

}  // namespace toric

#endif  // TORIC_JSON_IO_HPP
