/* Copyright 2026 The Holey Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the exact tiling-count library. Results are returned as
 * string tables behind an opaque handle; exact integers and rationals are
 * rendered in decimal ("123", "-5/2") since they routinely exceed any
 * machine width. All calls are thread-safe; error details are per-thread.
 */

#ifndef HOLEY_H_
#define HOLEY_H_

#include <stddef.h>

#if defined(_WIN32)
#define HOLEY_API __declspec(dllexport)
#else
#define HOLEY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum holey_status {
  HOLEY_OK = 0,
  HOLEY_ERR_USAGE = 1,     /* malformed arguments */
  HOLEY_ERR_DOMAIN = 2,    /* parity, hole range, or other domain violation */
  HOLEY_ERR_MISMATCH = 3,  /* independent computation routes disagree */
  HOLEY_ERR_LIMIT = 4,     /* instance exceeds a supported size bound */
  HOLEY_ERR_INTERNAL = 5
} holey_status;

typedef struct holey_table holey_table;

HOLEY_API const char *holey_version(void);
HOLEY_API const char *holey_status_name(holey_status status);

/* Message describing the most recent failure on this thread. */
HOLEY_API const char *holey_last_error(void);

/* Exact tiling counts of one region.
 *   family: plain | hexagon | vertical | lower | upper-weighted
 *   method: formula | matrix | oracle | all
 * c is the third side of the plain hexagon and ignored otherwise. The table
 * has columns route,value with one row per computed route.
 */
HOLEY_API holey_status holey_count(const char *family, long n, long b, long c, long k,
                                   const char *method, holey_table **out);

/* Cross-checking sweeps over all valid parameters in range. suites is a
 * comma list of oracle,pfaffian,lu,factorization,identities or NULL for
 * all. Columns: suite,name,status,detail.
 */
HOLEY_API holey_status holey_verify(long max_n, long max_m, const char *suites,
                                    holey_table **out);

/* Hole interactions in the large-region limit.
 *   which: V | Hminus | Hplus | H     xi: rational aspect ratio, e.g. "1"
 * Columns include the exact rational coefficient, both normalization
 * candidates, and the large-k asymptote.
 */
HOLEY_API holey_status holey_correlate(const char *which, long k, const char *xi,
                                       holey_table **out);

/* Finite-size correlations against both limit candidates on an n grid.
 * Columns: n,m,finite,limit_e,limit_noe,ratio_e,ratio_noe.
 */
HOLEY_API holey_status holey_convergence(const char *which, long k, const char *xi,
                                         const long *n_grid, size_t n_count,
                                         holey_table **out);

/* Limit values against the asymptotic law along a list of distances.
 * Columns: k,limit,asymptote,ratio.
 */
HOLEY_API holey_status holey_asymptote(const char *which, const char *xi, const long *k_list,
                                       size_t k_count, holey_table **out);

HOLEY_API size_t holey_table_rows(const holey_table *table);
HOLEY_API size_t holey_table_cols(const holey_table *table);
HOLEY_API const char *holey_table_name(const holey_table *table, size_t col);
HOLEY_API const char *holey_table_cell(const holey_table *table, size_t row, size_t col);
HOLEY_API void holey_table_free(holey_table *table);

#ifdef __cplusplus
}
#endif

#endif /* HOLEY_H_ */
