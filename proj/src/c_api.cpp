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


#include "floquet_walk/floquet_walk.h"

#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "floquet_walk/error.hpp"
#include "floquet_walk/experiments.hpp"
#include "floquet_walk/magnus.hpp"
#include "floquet_walk/model.hpp"
#include "floquet_walk/propagate.hpp"

struct fw_periodic {
  floquet_walk::PeriodicHamiltonian h;
};

struct fw_matrix {
  floquet_walk::ComplexMatrix m;
};

namespace {

using floquet_walk::Error;
using floquet_walk::ErrorCode;

static_assert(static_cast<int>(ErrorCode::kInvalidArgument) == FW_INVALID_ARGUMENT);
static_assert(static_cast<int>(ErrorCode::kSizeMismatch) == FW_SIZE_MISMATCH);
static_assert(static_cast<int>(ErrorCode::kIoFailure) == FW_IO_FAILURE);

thread_local std::string last_error;

fw_status fail(fw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
fw_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FW_OK;
  } catch (const Error& e) {
    return fail(static_cast<fw_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FW_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FW_INTERNAL, e.what());
  } catch (...) {
    return fail(FW_INTERNAL, "unknown exception");
  }
}

fw_status null_argument(const char* name) {
  return fail(FW_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

}  // namespace

extern "C" {

const char* fw_version(void) { return FLOQUET_WALK_VERSION; }

const char* fw_last_error(void) { return last_error.c_str(); }

const char* fw_status_name(fw_status status) {
  if (status == FW_OK) return "ok";
  if (status == FW_INTERNAL) return "internal";
  return floquet_walk::to_string(static_cast<ErrorCode>(status));
}

int fw_status_is_numerical(fw_status status) {
  if (status == FW_OK || status == FW_INTERNAL) return 0;
  return floquet_walk::is_numerical(static_cast<ErrorCode>(status)) ? 1 : 0;
}

fw_status fw_periodic_from_json(const char* json, fw_periodic** out) {
  if (json == nullptr) return null_argument("json");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new fw_periodic{floquet_walk::periodic_hamiltonian_from_json(json)}; });
}

void fw_periodic_free(fw_periodic* h) { delete h; }

fw_status fw_periodic_dim(const fw_periodic* h, size_t* dim) {
  if (h == nullptr) return null_argument("h");
  if (dim == nullptr) return null_argument("dim");
  *dim = static_cast<size_t>(h->h.dim());
  return FW_OK;
}

fw_status fw_periodic_period(const fw_periodic* h, double* period) {
  if (h == nullptr) return null_argument("h");
  if (period == nullptr) return null_argument("period");
  *period = h->h.period();
  return FW_OK;
}

fw_status fw_periodic_h_max(const fw_periodic* h, double* value) {
  if (h == nullptr) return null_argument("h");
  if (value == nullptr) return null_argument("value");
  return guarded([&] { *value = floquet_walk::h_max(h->h); });
}

fw_status fw_period_propagator(const fw_periodic* h, int steps_per_period, fw_matrix** out) {
  if (h == nullptr) return null_argument("h");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    floquet_walk::ComplexMatrix u =
        steps_per_period > 0 ? floquet_walk::period_propagator(h->h, steps_per_period)
                             : floquet_walk::period_propagator_converged(h->h, 200).unitary;
    *out = new fw_matrix{std::move(u)};
  });
}

fw_status fw_heff_magnus(const fw_periodic* h, int order, fw_matrix** out) {
  if (h == nullptr) return null_argument("h");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (order != 0 && order != 1) return fail(FW_INVALID_ARGUMENT, "order must be 0 or 1");
  return guarded([&] {
    auto heff = order == 0 ? floquet_walk::heff_order0(h->h) : floquet_walk::heff_order01(h->h);
    *out = new fw_matrix{std::move(heff.matrix)};
  });
}

fw_status fw_heff_numeric(const fw_periodic* h, int steps_per_period, fw_matrix** out) {
  if (h == nullptr) return null_argument("h");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    int steps = steps_per_period;
    if (steps <= 0) {
      steps = h->h.is_piecewise_constant()
                  ? 1
                  : floquet_walk::period_propagator_converged(h->h, 200).steps_per_period;
    }
    *out = new fw_matrix{floquet_walk::heff_numeric(h->h, steps).matrix};
  });
}

void fw_matrix_free(fw_matrix* m) { delete m; }

fw_status fw_matrix_dim(const fw_matrix* m, size_t* dim) {
  if (m == nullptr) return null_argument("m");
  if (dim == nullptr) return null_argument("dim");
  *dim = static_cast<size_t>(m->m.rows());
  return FW_OK;
}

fw_status fw_matrix_copy(const fw_matrix* m, double* buffer, size_t capacity) {
  if (m == nullptr) return null_argument("m");
  if (buffer == nullptr) return null_argument("buffer");
  const auto n = static_cast<size_t>(m->m.rows());
  if (capacity < 2 * n * n) {
    return fail(FW_SIZE_MISMATCH, "buffer holds " + std::to_string(capacity) + " doubles, need " +
                                      std::to_string(2 * n * n));
  }
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      const auto z = m->m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      buffer[2 * (r * n + c)] = z.real();
      buffer[2 * (r * n + c) + 1] = z.imag();
    }
  }
  return FW_OK;
}

fw_status fw_period_bound(double epsilon, double t_evol, double h_max, int order, double* period) {
  if (period == nullptr) return null_argument("period");
  return guarded([&] { *period = floquet_walk::period_bound(epsilon, t_evol, h_max, order); });
}

const char* fw_period_bound_note(void) { return floquet_walk::period_bound_note(); }

const char* const* fw_experiment_kinds(void) {
  static const auto table = [] {
    std::vector<const char*> names;
    for (const auto& k : floquet_walk::experiment_kinds()) names.push_back(k.c_str());
    names.push_back(nullptr);
    return names;
  }();
  return table.data();
}

fw_status fw_run_experiment(const char* kind, const char* config_path, const char* out_dir) {
  if (kind == nullptr) return null_argument("kind");
  if (config_path == nullptr) return null_argument("config_path");
  return guarded([&] {
    std::ifstream file(config_path, std::ios::binary);
    if (!file) {
      throw Error(ErrorCode::kConfigInvalid, std::string("cannot read config file ") + config_path);
    }
    std::ostringstream text;
    text << file.rdbuf();
    floquet_walk::run_experiment(kind, text.str(),
                                 out_dir ? std::filesystem::path(out_dir) : std::filesystem::path());
  });
}

}  // extern "C"
