#include "lcasis/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lcasis::io {

double round_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

json real_out(double v) { return json(round_sig(v)); }

json complex_out(cd v) {
  return json::array({round_sig(v.real()), round_sig(v.imag())});
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

namespace {

std::vector<int> parse_moduli(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("moduli must be a nonempty array");
  }
  std::vector<int> moduli;
  for (const auto& m : j) {
    if (!m.is_number_integer() || m.get<std::int64_t>() < 1) {
      throw ValidationError("moduli entries must be positive integers");
    }
    moduli.push_back(m.get<int>());
  }
  return moduli;
}

std::vector<GroupElement> parse_generator_array(const json& j) {
  if (!j.is_array()) throw ParseError("generators must be an array of tuples");
  std::vector<GroupElement> gens;
  for (const auto& tup : j) {
    if (!tup.is_array()) throw ParseError("generator must be a coordinate tuple");
    GroupElement g;
    for (const auto& c : tup) {
      if (!c.is_number_integer()) {
        throw ParseError("generator coordinates must be integers");
      }
      g.coords.push_back(c.get<int>());
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

GroupFile parse_group_file(const json& j) {
  if (!j.is_object() || !j.contains("moduli")) {
    throw ParseError("group file must be an object with a moduli field");
  }
  GroupFile file;
  file.group = make_group(parse_moduli(j.at("moduli")));
  if (j.contains("lattice")) {
    const json& lat = j.at("lattice");
    if (!lat.is_object() || !lat.contains("generators")) {
      throw ParseError("lattice must be an object with a generators field");
    }
    file.lattice_generators = parse_generator_array(lat.at("generators"));
  }
  return file;
}

std::vector<GroupElement> parse_lattice_json(const json& j) {
  if (j.is_array()) return parse_generator_array(j);
  if (j.is_object() && j.contains("generators")) {
    return parse_generator_array(j.at("generators"));
  }
  throw ParseError("lattice spec must be {\"generators\":[...]} or [[...]]");
}

std::vector<GroupElement> parse_lattice_spec(const std::string& spec_or_path) {
  const auto first = spec_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (spec_or_path[first] == '{' || spec_or_path[first] == '[')) {
    json j;
    try {
      j = json::parse(spec_or_path);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid inline lattice JSON: ") + e.what());
    }
    return parse_lattice_json(j);
  }
  return parse_lattice_json(load_json_file(spec_or_path));
}

namespace {

Signal parse_signal(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("values")) {
    throw ParseError("signal must be {\"group\":[...],\"values\":[[re,im],...]}");
  }
  Signal s;
  s.group = make_group(parse_moduli(j.at("group")));
  const json& vals = j.at("values");
  if (!vals.is_array()) throw ParseError("signal values must be an array");
  for (const auto& v : vals) {
    if (v.is_array() && v.size() == 2) {
      s.values.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else if (v.is_number()) {
      s.values.emplace_back(v.get<double>(), 0.0);
    } else {
      throw ParseError("signal entries must be [re,im] pairs or numbers");
    }
  }
  if (static_cast<std::int64_t>(s.values.size()) != s.group.order()) {
    throw ValidationError("signal length does not match group order");
  }
  return s;
}

}  // namespace

std::vector<Signal> parse_signals_json(const json& j) {
  const json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("signals")) {
    arr = &j.at("signals");
  } else {
    throw ParseError("signals file must be an array or {\"signals\":[...]}");
  }
  std::vector<Signal> signals;
  for (const auto& s : *arr) signals.push_back(parse_signal(s));
  if (signals.empty()) throw ValidationError("signals file contains no signals");
  return signals;
}

std::vector<Signal> load_signals_file(const std::string& path) {
  return parse_signals_json(load_json_file(path));
}

std::vector<Signal> load_signals_csv(const std::string& path,
                                     const GroupSpec& group) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Signal s;
  s.group = group;
  s.values.assign(static_cast<std::size_t>(group.order()), cd{0.0, 0.0});
  std::string line;
  bool any = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<double> fields;
    while (std::getline(row, cell, ',')) {
      try {
        fields.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("bad CSV cell in " + path + ": " + cell);
      }
    }
    if (fields.size() != group.moduli.size() + 2) {
      throw ParseError("CSV rows must be coordinate columns then re,im");
    }
    std::vector<int> coords(group.moduli.size());
    for (std::size_t i = 0; i < group.moduli.size(); ++i) {
      coords[i] = static_cast<int>(fields[i]);
    }
    if (!group.valid_coords(coords)) {
      throw ValidationError("CSV coordinate out of range in " + path);
    }
    s.values[static_cast<std::size_t>(group.index_of(coords))] =
        cd{fields[fields.size() - 2], fields[fields.size() - 1]};
    any = true;
  }
  if (!any) throw ParseError("CSV file has no data rows: " + path);
  return {s};
}

json signal_to_json(const Signal& s) {
  json vals = json::array();
  for (const cd& v : s.values) vals.push_back(complex_out(v));
  return json{{"group", s.group.moduli}, {"values", vals}};
}

json fiber_field_to_json(const FiberField& field) {
  json reps = json::array();
  for (const auto& r : field.section.representatives) reps.push_back(r.coords);
  json delta = json::array();
  for (const auto& d : field.delta.elements) delta.push_back(d.coords);
  json rows = json::array();
  for (Eigen::Index r = 0; r < field.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < field.matrix.cols(); ++c) {
      row.push_back(complex_out(field.matrix(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return json{{"format_version", 1},
              {"section", reps},
              {"delta", delta},
              {"matrix", rows}};
}

json frame_report_to_json(const FrameReport& report) {
  json per_omega = json::array();
  for (const auto& entry : report.per_omega) {
    json ge = json::array();
    for (double v : entry.gramian_eigs) ge.push_back(real_out(v));
    json de = json::array();
    for (double v : entry.dual_gramian_eigs) de.push_back(real_out(v));
    per_omega.push_back(json{{"omega", entry.omega},
                             {"gramian_eigs", std::move(ge)},
                             {"dual_gramian_eigs", std::move(de)},
                             {"skipped", entry.skipped}});
  }
  json frame = nullptr;
  if (report.frame) {
    frame = json::array(
        {real_out(report.frame->first), real_out(report.frame->second)});
  }
  json riesz = nullptr;
  if (report.riesz) {
    riesz = json::array(
        {real_out(report.riesz->first), real_out(report.riesz->second)});
  }
  return json{{"format_version", 1},
              {"bessel", real_out(report.bessel_bound)},
              {"frame", frame},
              {"riesz", riesz},
              {"flags",
               {{"is_bessel", report.is_bessel},
                {"is_frame_for_span", report.is_frame_for_span},
                {"is_riesz_sequence", report.is_riesz_sequence},
                {"is_parseval", report.is_parseval},
                {"is_tight", report.is_tight}}},
              {"per_omega", std::move(per_omega)},
              {"tol", real_out(report.tol)}};
}

}  // namespace lcasis::io
