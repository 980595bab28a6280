#pragma once

#include "oscspec/block_tree.hpp"
#include "oscspec/coeffs.hpp"
#include "oscspec/generators.hpp"
#include "oscspec/report.hpp"
#include "oscspec/spectrum.hpp"

#include <json.hpp>

#include <string>

namespace oscspec {

using Json = nlohmann::json;

// Rationals serialize as canonical "p/q" strings throughout.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

Json tree_to_json(const BlockTree& tree);
/// Rebuilds the tree from the stored parameters and verifies every
/// serialized block, window and gap against the rebuilt structure;
/// throws std::invalid_argument on any mismatch or malformed field.
BlockTree tree_from_json(const Json& j);

Json generators_to_json(const GeneratorSet& gens);

/// Combined construction file: {"tree": ..., "generators": ...}.
Json construction_to_json(const GeneratorSet& gens);
GeneratorSet construction_from_json(const Json& j);

Json isometry_to_json(const IsometryCheck& check);

Json point_class_to_json(const PointClass& pc);
Json spectrum_report_to_json(const SpectrumReport& report);

Json verification_report_to_json(const VerificationReport& report);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace oscspec
