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

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

#include "floquet_walk/error.hpp"

namespace floquet_walk::detail {

using Json = nlohmann::json;

[[noreturn]] inline void config_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kConfigInvalid, where + ": " + what);
}

inline void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) config_error(where, "expected an object");
}

// Fail closed on unknown keys.
inline void check_keys(const Json& j, std::initializer_list<std::string_view> allowed,
                       const std::string& where) {
  require_object(j, where);
  for (const auto& item : j.items()) {
    bool ok = false;
    for (auto key : allowed) ok = ok || key == item.key();
    if (!ok) config_error(where, "unknown key '" + item.key() + "'");
  }
}

inline const Json& require(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) config_error(where, "missing key '" + key + "'");
  return *it;
}

inline double get_number(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number()) config_error(where + "." + key, "expected a number");
  return v.get<double>();
}

inline double get_number_or(const Json& j, const std::string& key, double fallback,
                            const std::string& where) {
  if (!j.contains(key)) return fallback;
  return get_number(j, key, where);
}

inline long long get_integer(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) config_error(where + "." + key, "expected an integer");
  return v.get<long long>();
}

inline long long get_integer_or(const Json& j, const std::string& key, long long fallback,
                                const std::string& where) {
  if (!j.contains(key)) return fallback;
  return get_integer(j, key, where);
}

inline std::string get_string(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) config_error(where + "." + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace floquet_walk::detail
