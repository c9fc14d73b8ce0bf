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


/* C interface to the floquet-walk library. All functions return an
 * fw_status; on failure fw_last_error() describes the problem for the
 * calling thread. Matrices are row-major arrays of interleaved (re, im). */

#ifndef FLOQUET_WALK_FLOQUET_WALK_H_
#define FLOQUET_WALK_FLOQUET_WALK_H_

#include <stddef.h>

#if defined(FW_BUILDING_LIBRARY)
#define FW_API __attribute__((visibility("default")))
#else
#define FW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fw_status {
  FW_OK = 0,
  FW_INVALID_ARGUMENT = 1,
  FW_NON_HERMITIAN_INPUT = 2,
  FW_NON_UNITARY_INPUT = 3,
  FW_BRANCH_CUT = 4,
  FW_COMPLEX_SKELETON = 5,
  FW_ZERO_COUPLING = 6,
  FW_COUPLING_OUT_OF_RANGE = 7,
  FW_INVALID_PARTITION = 8,
  FW_CENTER_OUT_OF_RANGE = 9,
  FW_SIZE_MISMATCH = 10,
  FW_CONVERGENCE_CAP = 11,
  FW_CONFIG_INVALID = 12,
  FW_IO_FAILURE = 13,
  FW_INTERNAL = 99
} fw_status;

typedef struct fw_periodic fw_periodic;
typedef struct fw_matrix fw_matrix;

FW_API const char* fw_version(void);
FW_API const char* fw_last_error(void);
FW_API const char* fw_status_name(fw_status status);
/* Nonzero for statuses the CLI reports as numerical failures. */
FW_API int fw_status_is_numerical(fw_status status);

/* Periodic Hamiltonian from the JSON model document (see README). */
FW_API fw_status fw_periodic_from_json(const char* json, fw_periodic** out);
FW_API void fw_periodic_free(fw_periodic* h);
FW_API fw_status fw_periodic_dim(const fw_periodic* h, size_t* dim);
FW_API fw_status fw_periodic_period(const fw_periodic* h, double* period);
FW_API fw_status fw_periodic_h_max(const fw_periodic* h, double* value);

/* steps_per_period <= 0 selects step doubling until converged. */
FW_API fw_status fw_period_propagator(const fw_periodic* h, int steps_per_period, fw_matrix** out);
/* order: 0 (time average), 1 (order 0 plus first correction). */
FW_API fw_status fw_heff_magnus(const fw_periodic* h, int order, fw_matrix** out);
FW_API fw_status fw_heff_numeric(const fw_periodic* h, int steps_per_period, fw_matrix** out);

FW_API void fw_matrix_free(fw_matrix* m);
FW_API fw_status fw_matrix_dim(const fw_matrix* m, size_t* dim);
/* Copies dim*dim*2 doubles into buffer; capacity counts doubles. */
FW_API fw_status fw_matrix_copy(const fw_matrix* m, double* buffer, size_t capacity);

FW_API fw_status fw_period_bound(double epsilon, double t_evol, double h_max, int order,
                                 double* period);
FW_API const char* fw_period_bound_note(void);

/* Experiment names, NULL-terminated. */
FW_API const char* const* fw_experiment_kinds(void);
/* out_dir may be NULL to use the config's output.directory. */
FW_API fw_status fw_run_experiment(const char* kind, const char* config_path, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* FLOQUET_WALK_FLOQUET_WALK_H_ */
