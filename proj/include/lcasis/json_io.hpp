#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcasis/fiber.hpp"
#include "lcasis/frames.hpp"
#include "lcasis/group.hpp"
#include "lcasis/transform.hpp"

namespace lcasis::io {

using nlohmann::json;

/// Raised on malformed input (bad JSON, missing file). CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised on inputs that parse but are semantically invalid. CLI exit code 3.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Round to 15 significant digits so emitted reports carry no more precision
/// than the arithmetic warrants, and repeated runs stay byte-identical.
double round_sig(double v);
json real_out(double v);
json complex_out(cd v);

json load_json_file(const std::string& path);

struct GroupFile {
  GroupSpec group;
  std::optional<std::vector<GroupElement>> lattice_generators;
};

GroupFile parse_group_file(const json& j);

/// A lattice given either inline (JSON text) or as a file path. Accepts
/// {"generators":[[...]]} or a bare [[...]] array.
std::vector<GroupElement> parse_lattice_spec(const std::string& spec_or_path);
std::vector<GroupElement> parse_lattice_json(const json& j);

std::vector<Signal> parse_signals_json(const json& j);
std::vector<Signal> load_signals_file(const std::string& path);
std::vector<Signal> load_signals_csv(const std::string& path,
                                     const GroupSpec& group);

json signal_to_json(const Signal& s);
json fiber_field_to_json(const FiberField& field);
json frame_report_to_json(const FrameReport& report);

}  // namespace lcasis::io
