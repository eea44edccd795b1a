// Copyright 2026 The sop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the sop library.  Presentations are opaque handles.
 * Every function returns a sop_status; on failure a description is
 * available from sop_last_error() until the next call on the same thread.
 * Strings returned through char** are owned by the caller and released
 * with sop_string_free.  Structured results are JSON documents. */

#ifndef SOP_SOP_H
#define SOP_SOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SOP_API __declspec(dllexport)
#else
#define SOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sop_presentation sop_presentation;

typedef enum sop_status {
  SOP_OK                   = 0,
  SOP_FALSE                = 1, /* computed, and the property does not hold */
  SOP_ERR_PARSE            = 2,
  SOP_ERR_PRECONDITION     = 3,
  SOP_ERR_INVALID_ARGUMENT = 4, /* includes the enumeration guard */
  SOP_ERR_IO               = 5,
  SOP_ERR_INTERNAL         = 6
} sop_status;

typedef enum sop_length_mode { SOP_LENGTH_SUM = 0, SOP_LENGTH_MAX = 1 } sop_length_mode;

typedef enum sop_format { SOP_FORMAT_JSON = 0, SOP_FORMAT_CSV = 1 } sop_format;

typedef struct sop_experiment_config {
  uint32_t        alphabet_size;
  uint32_t        relation_count;
  uint32_t        length;
  sop_length_mode mode;
  uint64_t        seed;
  uint64_t        trials;
} sop_experiment_config;

SOP_API const char* sop_version(void);
SOP_API const char* sop_last_error(void);
SOP_API void        sop_string_free(char* s);

SOP_API sop_status sop_parse(const char* text, sop_presentation** out);
SOP_API sop_status sop_load(const char* path, sop_presentation** out);
SOP_API void       sop_free(sop_presentation* p);
SOP_API sop_status sop_serialize(const sop_presentation* p, char** out);

/* C(n) (strong != 0: strongly C(n)).  SOP_OK if it holds, SOP_FALSE if
 * not.  JSON: condition, n, strong, holds, degree ("unbounded" or an
 * integer), repeated_relation_words, offender ({relation_word,
 * decomposition} or null). */
SOP_API sop_status sop_check(const sop_presentation* p, uint32_t n, int strong, char** json);

/* JSON: pieces, count, max_piece_length, degree, factorizations (one per
 * relation word, x/y/z null when it has none), complement_classes. */
SOP_API sop_status sop_pieces(const sop_presentation* p, char** json);

/* Word problem for C(4) presentations; words as in the file format.
 * SOP_OK if equivalent, SOP_FALSE otherwise.  JSON: u, v, equivalent,
 * trace. */
SOP_API sop_status sop_equivalent(const sop_presentation* p,
                                  const char*             u,
                                  const char*             v,
                                  char**                  json);

/* Canonical form of a C(2) presentation.  Either output may be NULL.
 * JSON: presentation (serialized), generators, relations, eliminated,
 * renamed. */
SOP_API sop_status sop_canonicalize(const sop_presentation* p,
                                    sop_presentation**      out,
                                    char**                  json);

/* Monoid isomorphism of two C(2) presentations.  SOP_OK if isomorphic,
 * SOP_FALSE otherwise.  JSON: isomorphic, canonical (pair of serialized
 * forms). */
SOP_API sop_status sop_isomorphic(const sop_presentation* p,
                                  const sop_presentation* q,
                                  char**                  json);

/* Cancellativity of a C(4) presentation.  SOP_OK if two-sided
 * cancellative, SOP_FALSE otherwise.  JSON: left, right, cancellative,
 * left_witness, right_witness (pairs of words or null). */
SOP_API sop_status sop_cancellativity(const sop_presentation* p, char** json);

/* Property names: strong-c4, left-cancellative, right-cancellative,
 * cancellative.  CSV output is one row without header. */
SOP_API sop_status sop_experiment(const sop_experiment_config* cfg,
                                  const char*                  property,
                                  sop_format                   format,
                                  char**                       out);
SOP_API const char* sop_csv_header(void);

/* Exhaustive count over ordered presentations.  JSON: a, k, n,
 * presentations, strong_c2, isomorphism_types. */
SOP_API sop_status sop_count(uint32_t a, uint32_t k, uint32_t n, char** json);

/* Number of weak compositions of s into r parts, in decimal. */
SOP_API sop_status sop_weak_composition_count(uint32_t s, uint32_t r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SOP_SOP_H */
