#ifndef SUPERYBE_H
#define SUPERYBE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define SY_OK 0

// A required pointer argument was null.
#define SY_ERR_NULL 1

// A string argument was not valid UTF-8.
#define SY_ERR_UTF8 2

// The document text could not be parsed.
#define SY_ERR_PARSE 3

// No object, label or fixture with the given name.
#define SY_ERR_UNKNOWN 4

// The inputs violate a mathematical precondition.
#define SY_ERR_INVALID 5

// An internal panic was caught.
#define SY_ERR_PANIC 6

// A parsed document.
typedef struct SyDocument SyDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or null. Valid until the next call.
const char *sy_last_error(void);

// # Safety
// `s` must be null or a string returned by this library.
void sy_string_free(char *s);

// # Safety
// `doc` must be null or a handle returned by this library.
void sy_document_free(struct SyDocument *doc);

// Parses document text into a new handle.
//
// # Safety
// `source` must be a NUL-terminated string; `out` must be writable.
int32_t sy_document_parse(const char *source, struct SyDocument **out);

// Renders a document as text.
//
// # Safety
// `doc` must be a live handle; `out` must be writable.
int32_t sy_document_emit(const struct SyDocument *doc, char **out);

// Checks the algebra, every representation and every pre-Lie product.
//
// # Safety
// `doc` must be a live handle; `passed` must be writable.
int32_t sy_validate(const struct SyDocument *doc, bool *passed);

// Whether the named map is an O-operator for the named representation
// (`ad` and `coad` are built in).
//
// # Safety
// `doc` must be a live handle; the names NUL-terminated; `holds` writable.
int32_t sy_check_oop(const struct SyDocument *doc, const char *map, const char *rep, bool *holds);

// Whether the named tensor solves the super classical Yang-Baxter equation.
//
// # Safety
// `doc` must be a live handle; `tensor` NUL-terminated; `holds` writable.
int32_t sy_check_cybe(const struct SyDocument *doc, const char *tensor, bool *holds);

// A new document with `T^s` and `ρ^s` added as `{map}_s` and `{rep}_s`.
//
// # Safety
// `doc` must be a live handle; the names NUL-terminated; `out` writable.
int32_t sy_dualize(const struct SyDocument *doc,
                   const char *map,
                   const char *rep,
                   struct SyDocument **out);

// The semidirect algebra and the r-matrix of an O-operator, as a document
// with one tensor `r`. `dual` selects `r_{T^s}` in `g ⋉ (sV)*`.
//
// # Safety
// `doc` must be a live handle; the names NUL-terminated; `out` writable.
int32_t sy_build_rmatrix(const struct SyDocument *doc,
                         const char *map,
                         const char *rep,
                         bool dual,
                         struct SyDocument **out);

// The last level of the tree hierarchy along `word` (`+` and `-` steps).
//
// # Safety
// `doc` must be a live handle; the strings NUL-terminated; `out` writable.
int32_t sy_hierarchy(const struct SyDocument *doc,
                     const char *tensor,
                     const char *word,
                     struct SyDocument **out);

// The document of a built-in fixture and whether all its expectations hold.
//
// # Safety
// `name` must be NUL-terminated; `out` and `passed` writable (`out` may be null).
int32_t sy_fixture_load(const char *name, struct SyDocument **out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERYBE_H */
