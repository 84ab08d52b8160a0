// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/family_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spectral_optim/error.hpp"

namespace spo {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::Parse, what);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    parse_error(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

double number(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  parse_error(std::string(what) + " must be a number");
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    parse_error(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Vector vec(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  Vector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

std::vector<Vector> rows_of(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of arrays");
  std::vector<Vector> out;
  for (const auto& r : j) out.push_back(vec(r, what));
  return out;
}

RowSet set_from_json(const json& j, std::size_t d) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "finite") return RowSet::finite(rows_of(field(j, "rows"), "rows"));
  if (type == "graph") {
    const std::string sense = field(j, "sense").get<std::string>();
    if (sense != "at_most" && sense != "at_least") {
      parse_error("graph sense must be at_most or at_least");
    }
    return RowSet::graph_degree(d, count(field(j, "n"), "n"),
                                sense == "at_most" ? DegreeSense::AtMost
                                                   : DegreeSense::AtLeast);
  }
  if (type == "l1ball") {
    return RowSet::l1_ball(vec(field(j, "center"), "center"),
                           number(field(j, "radius"), "radius"));
  }
  if (type == "poly") return RowSet::halfspace_poly(d, rows_of(field(j, "normals"), "normals"));
  if (type == "ellipsoid") {
    return RowSet::ellipsoid(vec(field(j, "center"), "center"),
                             number(field(j, "radius"), "radius"),
                             vec(field(j, "axes"), "axes"));
  }
  if (type == "perturbed") {
    return RowSet::perturbed(set_from_json(field(j, "base"), d),
                             number(field(j, "alpha"), "alpha"),
                             count(field(j, "shift"), "shift"));
  }
  parse_error("unknown set type '" + type + "'");
}

json set_to_json(const RowSet& s) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          return {{"type", "finite"}, {"rows", v.rows}};
        } else if constexpr (std::is_same_v<T, GraphDegreeSet>) {
          return {{"type", "graph"},
                  {"n", v.n},
                  {"sense", v.sense == DegreeSense::AtMost ? "at_most" : "at_least"}};
        } else if constexpr (std::is_same_v<T, L1BallSet>) {
          return {{"type", "l1ball"}, {"center", v.center}, {"radius", v.radius}};
        } else if constexpr (std::is_same_v<T, HalfspacePolySet>) {
          return {{"type", "poly"}, {"normals", v.normals}};
        } else if constexpr (std::is_same_v<T, EllipsoidSet>) {
          return {{"type", "ellipsoid"},
                  {"center", v.center},
                  {"radius", v.radius},
                  {"axes", v.axes}};
        } else {
          return {{"type", "perturbed"},
                  {"alpha", v.alpha},
                  {"shift", v.shift_index},
                  {"base", set_to_json(*v.base)}};
        }
      },
      s.variant());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

json number_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json matrix_json(const NonNegativeMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto r = m.row(i);
    rows.push_back(Vector(r.begin(), r.end()));
  }
  return {{"d", m.dim()}, {"rows", rows}};
}

}  // namespace

ProductFamily parse_family(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    ProductFamily f;
    f.d = count(field(j, "d"), "d");
    const json& sets = field(j, "sets");
    if (!sets.is_array()) parse_error("sets must be an array");
    for (const auto& s : sets) f.sets.push_back(set_from_json(s, f.d));
    f.validate();
    return f;
  } catch (const json::exception& e) {
    parse_error(std::string("malformed family: ") + e.what());
  }
}

std::string family_to_json(const ProductFamily& family) {
  json sets = json::array();
  for (const auto& s : family.sets) sets.push_back(set_to_json(s));
  return json{{"d", family.d}, {"sets", sets}}.dump(1);
}

ProductFamily load_family(const std::string& path) {
  return parse_family(read_text_file(path));
}

void save_family(const ProductFamily& family, const std::string& path) {
  write_text_file(path, family_to_json(family) + "\n");
}

NonNegativeMatrix parse_matrix(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    const std::size_t d = count(field(j, "d"), "d");
    const auto rows = rows_of(field(j, "rows"), "rows");
    if (rows.size() != d) parse_error("matrix row count does not match d");
    for (const auto& r : rows) {
      if (r.size() != d) parse_error("matrix row length does not match d");
    }
    return NonNegativeMatrix::from_rows(rows);
  } catch (const json::exception& e) {
    parse_error(std::string("malformed matrix: ") + e.what());
  }
}

std::string matrix_to_json(const NonNegativeMatrix& m) { return matrix_json(m).dump(); }

NonNegativeMatrix load_matrix(const std::string& path) {
  return parse_matrix(read_text_file(path));
}

void save_matrix(const NonNegativeMatrix& m, const std::string& path) {
  write_text_file(path, matrix_to_json(m) + "\n");
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string trace_to_csv(const IterationTrace& trace) {
  std::ostringstream out;
  out << "iter,rho,s_bound,t_bound,rows_changed,time_s\n";
  for (const auto& rec : trace) {
    out << rec.iter << ',' << format_number(rec.rho) << ','
        << format_number(rec.s_bound) << ',' << format_number(rec.t_bound) << ',';
    for (std::size_t k = 0; k < rec.rows_changed.size(); ++k) {
      if (k) out << ';';
      out << rec.rows_changed[k];
    }
    out << ',' << format_number(rec.time_s) << '\n';
  }
  return out.str();
}

std::string result_to_json(const OptimizationResult& r) {
  json j = {{"rho", r.rho},
            {"direction", std::string(to_string(r.direction))},
            {"status", std::string(to_string(r.status))},
            {"iterations", r.iterations},
            {"t_bound", number_or_inf(r.t_bound)},
            {"s_bound", number_or_inf(r.s_bound)},
            {"matrix", matrix_json(r.matrix)}};
  if (r.unperturbed_rho) j["unperturbed_rho"] = *r.unperturbed_rho;
  if (r.perturbed_rho) j["perturbed_rho"] = *r.perturbed_rho;
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace spo
