#ifndef FUCHSIAN_H
#define FUCHSIAN_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FUCHSIAN_BUILDING)
#define FU_API __attribute__((visibility("default")))
#else
#define FU_API
#endif

typedef struct fu_ode fu_ode;

typedef enum fu_status {
    FU_OK = 0,
    FU_E_ZERO_POLYNOMIAL,
    FU_E_ZERO_FUNCTION,
    FU_E_ZERO_DIVISION,
    FU_E_NOT_FUCHSIAN,
    FU_E_NON_RATIONAL_EXPONENT,
    FU_E_DEGENERATE_MAP,
    FU_E_ORDER_MISMATCH,
    FU_E_UNKNOWN_GROUP,
    FU_E_NOT_IN_REDUCED_FORM,
    FU_E_ZERO_POTENTIAL,
    FU_E_EMPTY_BASIS,
    FU_E_NO_INVARIANTS,
    FU_E_SYNTAX,
    FU_E_DIVISION_BY_ZERO_FUNCTION,
    FU_E_UNKNOWN_KEY,
    FU_E_INVALID_ARGUMENT,
    FU_E_INTERNAL
} fu_status;

typedef enum fu_format { FU_FORMAT_TEXT = 0, FU_FORMAT_JSON = 1 } fu_format;

/* Message of the last failing call on this thread; never NULL. */
FU_API const char *fu_last_error(void);
/* Name of a status code, e.g. "NotFuchsian". */
FU_API const char *fu_status_name(fu_status status);
/* Nonzero for malformed input (syntax, unknown key, bad argument). */
FU_API int fu_status_is_input_error(fu_status status);

/* coeffs holds a_0 .. a_{order-1}; leading may be NULL (monic). */
FU_API fu_status fu_ode_from_coeffs(int order, const char *const *coeffs, const char *leading,
                                    const char *var, fu_ode **out);
FU_API fu_status fu_ode_from_catalog(const char *key, fu_ode **out);
FU_API void fu_ode_free(fu_ode *ode);
FU_API int fu_ode_order(const fu_ode *ode);
FU_API fu_status fu_ode_to_string(const fu_ode *ode, char **out);

FU_API fu_status fu_pullback(const fu_ode *ode, const char *map, const char *var, fu_ode **out);
FU_API fu_status fu_normalize(const fu_ode *ode, fu_ode **out);
FU_API fu_status fu_sympow(const fu_ode *ode, int d, fu_ode **out);
FU_API fu_status fu_equivalent(const fu_ode *a, const fu_ode *b, int *out);

/* Reports; *out is a NUL-terminated string to release with fu_string_free. */
FU_API fu_status fu_report_equation(const fu_ode *ode, const char *command, fu_format fmt, char **out);
/* group_order <= 0 omits the genus block. */
FU_API fu_status fu_analyze(const fu_ode *ode, long group_order, fu_format fmt, char **out);
/* extra_places: optional list of place polynomials in the equation variable or "infinity". */
FU_API fu_status fu_genus(const fu_ode *ode, long group_order, long base_genus,
                          const char *const *extra_places, int n_extra, fu_format fmt, char **out);
FU_API fu_status fu_equiv_report(const fu_ode *a, const fu_ode *b, fu_format fmt, char **out);
/* d > 0 takes the d-th symmetric power first. */
FU_API fu_status fu_ratsol(const fu_ode *ode, int d, fu_format fmt, char **out);
/* d <= 0 uses the default degree for the group. */
FU_API fu_status fu_ruled(const char *group, int d, fu_format fmt, char **out);
/* key NULL lists the catalog keys. */
FU_API fu_status fu_catalog(const char *key, fu_format fmt, char **out);
/* Pullback partner and map of a catalog entry; NULL strings when absent. */
FU_API fu_status fu_catalog_pullback(const char *key, char **partner, char **map);

FU_API void fu_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif
