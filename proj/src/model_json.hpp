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

#include <string>

#include "floquet_walk/model.hpp"
#include "json_util.hpp"

namespace floquet_walk::detail {

Json drive_to_json(const Drive& d);
Drive drive_from_json(const Json& j, const std::string& where);

Json static_to_json(const StaticHamiltonian& h);
StaticHamiltonian static_from_json(const Json& j, const std::string& where);

Json periodic_to_json(const PeriodicHamiltonian& h);
PeriodicHamiltonian periodic_from_json(const Json& j, const std::string& where);

}  // namespace floquet_walk::detail
