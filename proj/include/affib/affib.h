/*
 * Copyright 2026 The affib Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AFFIB_AFFIB_H
#define AFFIB_AFFIB_H

#include <stddef.h>
#include <stdint.h>

#if defined(AFFIB_BUILDING_LIBRARY)
#define AFFIB_API __attribute__((visibility("default")))
#else
#define AFFIB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum affib_status {
  AFFIB_OK = 0,
  AFFIB_CHECK_FAILED = 1,
  AFFIB_INPUT_ERROR = 2,
  AFFIB_INTERNAL_ERROR = 3
} affib_status;

/* Command inputs. Strings are copied; NULL clears a field. */
typedef struct affib_request affib_request;
/* Output of one command: exit code plus JSON or text. */
typedef struct affib_result affib_result;

AFFIB_API const char *affib_version(void);
/* Message of the last failed call on this thread, "" if none. */
AFFIB_API const char *affib_last_error(void);

AFFIB_API affib_request *affib_request_new(void);
AFFIB_API void affib_request_free(affib_request *req);
AFFIB_API affib_status affib_request_set_potential(affib_request *req, const char *expr);
AFFIB_API affib_status affib_request_set_map(affib_request *req, const char *exprs);
AFFIB_API affib_status affib_request_set_catalog(affib_request *req, const char *id);
AFFIB_API affib_status affib_request_set_vars(affib_request *req, const char *vars);
AFFIB_API affib_status affib_request_set_curve(affib_request *req, const char *curve);
AFFIB_API affib_status affib_request_set_pieces(affib_request *req, const char *pieces);
AFFIB_API affib_status affib_request_set_seed(affib_request *req, uint64_t seed);
AFFIB_API affib_status affib_request_set_samples(affib_request *req, size_t samples);
AFFIB_API affib_status affib_request_set_json(affib_request *req, int json);

/* Each returns the command's exit code as a status and stores the result
 * in *out, which the caller frees. *out is NULL only on AFFIB_INTERNAL_ERROR
 * or a NULL argument. */
AFFIB_API affib_status affib_analyze(const affib_request *req, affib_result **out);
AFFIB_API affib_status affib_limit(const affib_request *req, affib_result **out);
AFFIB_API affib_status affib_conjecture(const affib_request *req, affib_result **out);
AFFIB_API affib_status affib_catalog_list(const affib_request *req, affib_result **out);

AFFIB_API int affib_result_exit_code(const affib_result *res);
/* Valid until the result is freed. */
AFFIB_API const char *affib_result_output(const affib_result *res);
AFFIB_API void affib_result_free(affib_result *res);

AFFIB_API size_t affib_catalog_size(void);
/* NULL when index is out of range. */
AFFIB_API const char *affib_catalog_id(size_t index);

#ifdef __cplusplus
}
#endif

#endif /* AFFIB_AFFIB_H */
