/* Licensed under the Apache License 2.0 (see LICENSE file). */

#ifndef INCALG_INCALG_H
#define INCALG_INCALG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(INCALG_BUILDING)
#define INCALG_API __declspec(dllexport)
#else
#define INCALG_API __declspec(dllimport)
#endif
#else
#define INCALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible call. */
enum {
    INCALG_OK = 0,
    INCALG_ERR_DOMAIN = 1,   /* input well formed, object does not exist */
    INCALG_ERR_PARSE = 2,    /* malformed spec, JSON document or number */
    INCALG_ERR_INTERNAL = 3, /* a library cross-check failed */
    INCALG_ERR_ARGUMENT = 4  /* null pointer or bad enum value */
};

enum { INCALG_CSV = 0, INCALG_JSON = 1 };

typedef struct incalg_poset incalg_poset;
typedef struct incalg_relation incalg_relation;

INCALG_API const char* incalg_version(void);

/* Message of the last failed call on this thread, "" if none. */
INCALG_API const char* incalg_last_error(void);

/* Frees strings returned through char** out parameters. */
INCALG_API void incalg_string_free(char* s);

/* Generator spec ("boolean:3", "chain:4", "divisors:12", "fan:2") or the
 * path of a poset JSON file. */
INCALG_API int incalg_poset_open(const char* spec, incalg_poset** out);
INCALG_API int incalg_poset_from_json(const char* text, incalg_poset** out);
INCALG_API void incalg_poset_free(incalg_poset* p);
INCALG_API size_t incalg_poset_size(const incalg_poset* p);

/* Builtin relation name or the path of a relation JSON file. The relation
 * keeps its own copy of the poset. */
INCALG_API int incalg_relation_open(const incalg_poset* p, const char* spec, incalg_relation** out);
INCALG_API int incalg_relation_from_json(const incalg_poset* p, const char* text, incalg_relation** out);
INCALG_API void incalg_relation_free(incalg_relation* r);
INCALG_API size_t incalg_relation_class_count(const incalg_relation* r);

/* Key of class `index` (classes sorted by interval size, then key). */
INCALG_API int incalg_relation_class_key(const incalg_relation* r, size_t index, char** out);

/* *ok = 1 when nabla-compatible, delta-compatible and unitary. */
INCALG_API int incalg_relation_compatible(const incalg_relation* r, int* ok);

INCALG_API int incalg_relation_verdict(const incalg_relation* r, int fmt, char** out);
INCALG_API int incalg_relation_mobius(const incalg_relation* r, int fmt, char** out);

/* Moebius value of one class as "p/q". */
INCALG_API int incalg_relation_mobius_value(const incalg_relation* r, const char* key, char** out);

/* Structure constants of the interval bialgebra as JSON. */
INCALG_API int incalg_relation_bialgebra_json(const incalg_relation* r, char** out);

/* Complete command outputs, as printed by the command line tool. */
INCALG_API int incalg_poset_check(const char* poset_spec, int fmt, char** out);
INCALG_API int incalg_relation_check(const char* poset_spec, const char* relation_spec, int fmt, char** out);
INCALG_API int incalg_mobius_table(const char* poset_spec, const char* relation_spec, int fmt, char** out);
INCALG_API int incalg_antipode_table(const char* poset_spec, const char* relation_spec, int fmt, char** out);
INCALG_API int incalg_bialgebra_verify(const char* poset_spec, const char* relation_spec, uint64_t seed, int fmt,
                                       char** out);
INCALG_API int incalg_bernoulli_table(unsigned n, int fmt, char** out);
INCALG_API int incalg_classical_mobius_table(size_t max, int fmt, char** out);
INCALG_API int incalg_demo(const char* name, uint64_t seed, int fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
