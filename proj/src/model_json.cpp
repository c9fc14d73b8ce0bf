// Copyright 2026 The floquet-walk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "model_json.hpp"

#include <variant>

namespace floquet_walk {
namespace detail {

namespace {

std::string at(const std::string& where, std::size_t k) {
  return where + "[" + std::to_string(k) + "]";
}

const Json& require_array(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_array()) config_error(where + "." + key, "expected an array");
  return v;
}

int node_index(const Json& j, const std::string& key, const std::string& where) {
  const long long v = get_integer(j, key, where);
  if (v < 0 || v > 1'000'000) config_error(where + "." + key, "node index out of range");
  return static_cast<int>(v);
}

// Model-level validation errors surface as config errors naming the field.
template <class F>
auto rethrow_as_config(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigInvalid) throw;
    config_error(where, e.what());
  }
}

}  // namespace

Json drive_to_json(const Drive& d) {
  if (const auto* p = std::get_if<PiecewiseDrive>(&d.representation())) {
    Json bps = Json::array();
    for (const auto& f : p->breakpoints) bps.push_back(f.to_string());
    Json segs = Json::array();
    for (const auto& s : p->segments) {
      Json seg = {{"offset", s.offset}};
      if (!s.is_constant()) {
        seg["sine_amplitude"] = s.sine_amplitude;
        seg["sine_cycles"] = s.sine_cycles;
        seg["sine_phase"] = s.sine_phase;
      }
      segs.push_back(std::move(seg));
    }
    return {{"type", "piecewise"}, {"breakpoints", bps}, {"segments", segs}};
  }
  const auto& h = std::get<HarmonicDrive>(d.representation());
  Json harmonics = Json::array();
  for (const auto& x : h.harmonics) {
    harmonics.push_back({{"order", x.order}, {"amplitude", x.amplitude}, {"phase", x.phase}});
  }
  return {{"type", "harmonic"}, {"dc", h.dc}, {"harmonics", harmonics}};
}

Drive drive_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  const std::string type = get_string(j, "type", where);
  if (type == "constant") {
    check_keys(j, {"type", "value"}, where);
    return Drive::constant(get_number(j, "value", where));
  }
  if (type == "harmonic") {
    check_keys(j, {"type", "dc", "harmonics"}, where);
    std::vector<Harmonic> harmonics;
    if (j.contains("harmonics")) {
      const Json& arr = require_array(j, "harmonics", where);
      for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string w = at(where + ".harmonics", k);
        check_keys(arr[k], {"order", "amplitude", "phase"}, w);
        harmonics.push_back(Harmonic{static_cast<int>(get_integer(arr[k], "order", w)),
                                     get_number(arr[k], "amplitude", w),
                                     get_number_or(arr[k], "phase", 0.0, w)});
      }
    }
    const double dc = get_number_or(j, "dc", 0.0, where);
    return rethrow_as_config(where, [&] { return Drive::harmonic(dc, harmonics); });
  }
  if (type == "piecewise") {
    check_keys(j, {"type", "breakpoints", "segments", "values"}, where);
    std::vector<Fraction> bps;
    const Json& arr = require_array(j, "breakpoints", where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string w = at(where + ".breakpoints", k);
      if (arr[k].is_string()) {
        bps.push_back(rethrow_as_config(w, [&] { return Fraction::parse(arr[k].get<std::string>()); }));
      } else if (arr[k].is_number_integer()) {
        bps.emplace_back(arr[k].get<std::int64_t>());
      } else {
        config_error(w, "breakpoint must be an integer or a \"p/q\" string");
      }
    }
    std::vector<Segment> segments;
    if (j.contains("values") == j.contains("segments")) {
      config_error(where, "exactly one of 'values' or 'segments' is required");
    }
    if (j.contains("values")) {
      const Json& vals = require_array(j, "values", where);
      for (std::size_t k = 0; k < vals.size(); ++k) {
        if (!vals[k].is_number()) config_error(at(where + ".values", k), "expected a number");
        segments.push_back(Segment{vals[k].get<double>(), 0.0, 0.0, 0.0});
      }
    } else {
      const Json& segs = require_array(j, "segments", where);
      for (std::size_t k = 0; k < segs.size(); ++k) {
        const std::string w = at(where + ".segments", k);
        check_keys(segs[k], {"offset", "sine_amplitude", "sine_cycles", "sine_phase"}, w);
        segments.push_back(Segment{get_number_or(segs[k], "offset", 0.0, w),
                                   get_number_or(segs[k], "sine_amplitude", 0.0, w),
                                   get_number_or(segs[k], "sine_cycles", 0.0, w),
                                   get_number_or(segs[k], "sine_phase", 0.0, w)});
      }
    }
    return rethrow_as_config(where, [&] { return Drive::piecewise(bps, segments); });
  }
  config_error(where + ".type", "unknown drive type '" + type + "'");
}

Json static_to_json(const StaticHamiltonian& h) {
  Json edges = Json::array();
  for (const auto& [key, v] : h.edges()) {
    edges.push_back({{"i", key.first}, {"j", key.second}, {"re", v.real()}, {"im", v.imag()}});
  }
  return {{"dim", h.dim()}, {"onsite", h.onsite_energies()}, {"edges", edges}};
}

namespace {

StaticHamiltonian static_body_from_json(const Json& j, const std::string& where) {
  const long long dim = get_integer(j, "dim", where);
  if (dim < 1 || dim > 100'000) config_error(where + ".dim", "must be a positive integer");
  StaticHamiltonian h(static_cast<int>(dim));
  if (j.contains("onsite")) {
    const Json& arr = require_array(j, "onsite", where);
    if (static_cast<long long>(arr.size()) != dim) {
      config_error(where + ".onsite", "length must equal dim");
    }
    for (std::size_t k = 0; k < arr.size(); ++k) {
      if (!arr[k].is_number()) config_error(at(where + ".onsite", k), "expected a number");
      h.set_onsite(static_cast<int>(k), arr[k].get<double>());
    }
  }
  if (j.contains("edges")) {
    const Json& arr = require_array(j, "edges", where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string w = at(where + ".edges", k);
      check_keys(arr[k], {"i", "j", "re", "im"}, w);
      const int a = node_index(arr[k], "i", w);
      const int b = node_index(arr[k], "j", w);
      const Complex v(get_number_or(arr[k], "re", 0.0, w), get_number_or(arr[k], "im", 0.0, w));
      rethrow_as_config(w, [&] {
        h.set_coupling(a, b, v);
        return 0;
      });
    }
  }
  return h;
}

}  // namespace

StaticHamiltonian static_from_json(const Json& j, const std::string& where) {
  check_keys(j, {"dim", "onsite", "edges"}, where);
  return static_body_from_json(j, where);
}

Json periodic_to_json(const PeriodicHamiltonian& h) {
  Json out = static_to_json(h.skeleton());
  out["period"] = h.period();
  Json edge_drives = Json::array();
  for (const auto& [key, d] : h.edge_drives()) {
    edge_drives.push_back({{"i", key.first}, {"j", key.second}, {"drive", drive_to_json(d)}});
  }
  Json onsite_drives = Json::array();
  for (const auto& [node, d] : h.onsite_drives()) {
    onsite_drives.push_back({{"node", node}, {"drive", drive_to_json(d)}});
  }
  out["edge_drives"] = edge_drives;
  out["onsite_drives"] = onsite_drives;
  return out;
}

PeriodicHamiltonian periodic_from_json(const Json& j, const std::string& where) {
  check_keys(j, {"dim", "onsite", "edges", "period", "edge_drives", "onsite_drives"}, where);
  StaticHamiltonian skeleton = static_body_from_json(j, where);
  const double period = get_number(j, "period", where);
  PeriodicHamiltonian h = rethrow_as_config(
      where + ".period", [&] { return PeriodicHamiltonian(skeleton, period); });
  if (j.contains("edge_drives")) {
    const Json& arr = require_array(j, "edge_drives", where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string w = at(where + ".edge_drives", k);
      check_keys(arr[k], {"i", "j", "drive"}, w);
      const int a = node_index(arr[k], "i", w);
      const int b = node_index(arr[k], "j", w);
      Drive d = drive_from_json(require(arr[k], "drive", w), w + ".drive");
      rethrow_as_config(w, [&] {
        h.set_edge_drive(a, b, d);
        return 0;
      });
    }
  }
  if (j.contains("onsite_drives")) {
    const Json& arr = require_array(j, "onsite_drives", where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string w = at(where + ".onsite_drives", k);
      check_keys(arr[k], {"node", "drive"}, w);
      const int node = node_index(arr[k], "node", w);
      Drive d = drive_from_json(require(arr[k], "drive", w), w + ".drive");
      rethrow_as_config(w, [&] {
        h.set_onsite_drive(node, d);
        return 0;
      });
    }
  }
  return h;
}

}  // namespace detail

namespace {

detail::Json parse_document(std::string_view text) {
  try {
    return detail::Json::parse(text);
  } catch (const detail::Json::parse_error& e) {
    throw Error(ErrorCode::kConfigInvalid, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const StaticHamiltonian& h) { return detail::static_to_json(h).dump(2); }

std::string to_json(const PeriodicHamiltonian& h) { return detail::periodic_to_json(h).dump(2); }

StaticHamiltonian static_hamiltonian_from_json(std::string_view text) {
  return detail::static_from_json(parse_document(text), "hamiltonian");
}

PeriodicHamiltonian periodic_hamiltonian_from_json(std::string_view text) {
  return detail::periodic_from_json(parse_document(text), "hamiltonian");
}

}  // namespace floquet_walk
