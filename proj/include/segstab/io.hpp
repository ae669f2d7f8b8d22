#pragma once

#include "segstab/forge.hpp"
#include "segstab/geometry.hpp"
#include "segstab/hardness.hpp"
#include "segstab/laminar.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace segstab {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings; parsing also accepts integers and
/// plain numbers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Rect& r);
Json to_json(const Segment& s);
Rect rect_from_json(const Json& j);
Segment segment_from_json(const Json& j);

/// {rects, candidates?, objective, hv}. Reading validates the instance.
Json to_json(const StabInstance& inst);
StabInstance instance_from_json(const Json& j);

/// {segments, cost, assignment}; assignment keys are rect ids.
Json to_json(const Solution& sol);
Solution solution_from_json(const Json& j);

Json to_json(const LaminarDecomposition& dec);
Json to_json(const PiercingInstance3D& p);
Json to_json(const SpscInstance& s);
Json to_json(const NPGadgetInstance& np);  // certificate: c, n, gadget metadata

/// Throws Error when the file cannot be read or is not valid JSON.
Json read_json_file(const std::filesystem::path& path);
/// Writes text to `path`, or to stdout when `path` is empty or "-".
void write_output(const std::filesystem::path& path, const std::string& text);

}  // namespace segstab
