/*
 * afp.h - C interface to the affine plane / translation group / skew-field
 * library. Objects are opaque handles; every call returns an afp_status and
 * the message of the last failure on the calling thread is available from
 * afp_last_error(). Strings returned through char** are owned by the caller
 * and must be released with afp_string_free().
 */
#ifndef AFP_AFP_H
#define AFP_AFP_H

#include <stddef.h>

#if defined(_WIN32)
#  define AFP_API __declspec(dllexport)
#else
#  define AFP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afp_status {
  AFP_OK = 0,
  /* The requested checks ran and at least one failed; the report says which. */
  AFP_VERIFICATION_FAILED = 1,
  AFP_INVALID_ARGUMENT = 2,
  AFP_IO_ERROR = 3,
  AFP_INTERNAL_ERROR = 4
} afp_status;

typedef enum afp_enumeration {
  AFP_ENUM_TRANSLATIONS = 0,
  AFP_ENUM_DILATIONS = 1
} afp_enumeration;

typedef struct afp_plane afp_plane;

AFP_API const char* afp_version(void);
AFP_API const char* afp_last_error(void);
AFP_API void afp_string_free(char* s);

/* AG(2,q). `poly` holds k+1 coefficients, constant term first; pass NULL/0
 * for the built-in default. */
AFP_API afp_status afp_plane_build_ag2(unsigned q, const unsigned* poly, size_t poly_len, afp_plane** out);
/* Plane JSON text: {"num_points": N, "lines": [[...], ...]}. */
AFP_API afp_status afp_plane_from_json(const char* json, afp_plane** out);
AFP_API afp_status afp_plane_load_file(const char* path, afp_plane** out);
AFP_API void afp_plane_free(afp_plane* plane);

AFP_API size_t afp_plane_num_points(const afp_plane* plane);
AFP_API size_t afp_plane_num_lines(const afp_plane* plane);
/* Canonical plane JSON (lines sorted). */
AFP_API afp_status afp_plane_to_json(const afp_plane* plane, char** out_json);

/* Each verification writes a JSON object whose "checks" member is an array
 * [{"name", "status": "pass"|"fail", "detail"?, "witness"?}, ...]; some calls
 * add further members (counts, enumerated maps, skew-field tables).
 * Returns AFP_OK when every check passed, AFP_VERIFICATION_FAILED otherwise;
 * the JSON is written in both cases. */
AFP_API afp_status afp_check_axioms(afp_plane* plane, char** out_report);
AFP_API afp_status afp_enumerate(afp_plane* plane, afp_enumeration what, char** out_json);
AFP_API afp_status afp_verify_group(afp_plane* plane, char** out_report);
AFP_API afp_status afp_verify_skewfield(afp_plane* plane, unsigned base_point, int run_oracle, char** out_report);

/* Checks an endomorphism JSON {"group_order": n, "image": [...]} against the
 * plane's translation group: homomorphism, trace preservation, and, when it
 * is nonzero and trace-preserving, its multiplicative inverse. */
AFP_API afp_status afp_check_endomorphism(afp_plane* plane, const char* endo_json, unsigned base_point,
                                          char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* AFP_AFP_H */
