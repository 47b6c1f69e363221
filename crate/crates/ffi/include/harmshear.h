#ifndef HARMSHEAR_H
#define HARMSHEAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_NULL_POINTER = 1,
  HS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The parameters name a shear that cannot be built or lifted.
   */
  HS_STATUS_UNSUPPORTED = 3,
  /**
   * A pole, a branch cut or a point outside a canonical surface's domain.
   */
  HS_STATUS_DOMAIN = 4,
  /**
   * Quadrature or series failed to converge.
   */
  HS_STATUS_NUMERIC = 5,
  HS_STATUS_IO = 6,
  /**
   * A verification ran but at least one check failed.
   */
  HS_STATUS_CHECK_FAILED = 7,
  HS_STATUS_PANIC = 8,
} HsStatus;

typedef enum HsMeshFormat {
  HS_MESH_FORMAT_OBJ = 0,
  HS_MESH_FORMAT_CSV = 1,
  HS_MESH_FORMAT_JSON = 2,
} HsMeshFormat;

/**
 * A sampled minimal-graph mesh.
 */
typedef struct HsMesh HsMesh;

/**
 * A harmonic shear together with its lift, when the dilatation admits one.
 */
typedef struct HsShear HsShear;

typedef struct HsComplex {
  double re;
  double im;
} HsComplex;

typedef struct HsPoint3 {
  double x1;
  double x2;
  double x3;
} HsPoint3;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *hs_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hs_string_free(char *s);

/**
 * Shear of `F_c` with dilatation `z(z + a)/(1 + az)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum HsStatus hs_shear_new_fc_mobius(double c, double a, struct HsShear **out);

/**
 * Shear of `F_c` with dilatation `z^k`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum HsStatus hs_shear_new_fc_power(double c, uint32_t k, struct HsShear **out);

/**
 * Shear of `F_n` with dilatation `z^n`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum HsStatus hs_shear_new_epicycloid(uint32_t n, struct HsShear **out);

/**
 * Releases a shear. NULL is ignored.
 *
 * # Safety
 * `shear` must come from an `hs_shear_new_*` call and not have been freed.
 */
void hs_shear_free(struct HsShear *shear);

/**
 * 1 when the shear collapses the boundary, 0 otherwise or for NULL.
 *
 * # Safety
 * `shear` must be NULL or a live handle.
 */
int32_t hs_shear_is_degenerate(const struct HsShear *shear);

/**
 * 1 when the shear lifts to a minimal graph, 0 otherwise or for NULL.
 *
 * # Safety
 * `shear` must be NULL or a live handle.
 */
int32_t hs_shear_has_lift(const struct HsShear *shear);

/**
 * Evaluates `h`, `g` and `f = h + conj(g)` at `z`. Any output may be NULL.
 *
 * # Safety
 * `shear` must be a live handle; non-NULL outputs must be writable.
 */
enum HsStatus hs_shear_eval(const struct HsShear *shear,
                            struct HsComplex z,
                            struct HsComplex *h,
                            struct HsComplex *g,
                            struct HsComplex *f);

/**
 * Point of the minimal graph above `z`.
 *
 * # Safety
 * `shear` must be a live handle and `out` writable.
 */
enum HsStatus hs_shear_lift(const struct HsShear *shear, struct HsComplex z, struct HsPoint3 *out);

/**
 * Runs every applicable check; writes the JSON report to `*json_out`.
 *
 * Returns `HS_STATUS_CHECK_FAILED` when the report is written but some
 * check failed. Free the string with [`hs_string_free`].
 *
 * # Safety
 * `shear` must be a live handle and `json_out` writable.
 */
enum HsStatus hs_shear_verify(const struct HsShear *shear, char **json_out);

/**
 * Gauss hypergeometric function `2F1(a, b; c; z)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum HsStatus hs_hyp2f1(struct HsComplex a,
                        struct HsComplex b,
                        struct HsComplex c,
                        struct HsComplex z,
                        struct HsComplex *out);

/**
 * Samples the lift on a polar grid with a center node.
 *
 * `workers = 0` uses the machine's parallelism; the result does not depend
 * on it.
 *
 * # Safety
 * `shear` must be a live handle and `out` writable.
 */
enum HsStatus hs_mesh_sample(const struct HsShear *shear,
                             size_t n_circles,
                             size_t n_rays,
                             double r_max,
                             size_t workers,
                             struct HsMesh **out);

/**
 * Releases a mesh. NULL is ignored.
 *
 * # Safety
 * `mesh` must come from [`hs_mesh_sample`] and not have been freed.
 */
void hs_mesh_free(struct HsMesh *mesh);

/**
 * Number of vertices, 0 for NULL.
 *
 * # Safety
 * `mesh` must be NULL or a live handle.
 */
size_t hs_mesh_vertex_count(const struct HsMesh *mesh);

/**
 * Number of faces, 0 for NULL.
 *
 * # Safety
 * `mesh` must be NULL or a live handle.
 */
size_t hs_mesh_face_count(const struct HsMesh *mesh);

/**
 * Copies up to `len` vertices into `out`; writes the total count to `*written`.
 *
 * # Safety
 * `mesh` must be a live handle, `out` must hold `len` points and `written`
 * must be NULL or writable.
 */
enum HsStatus hs_mesh_vertices(const struct HsMesh *mesh,
                               struct HsPoint3 *out,
                               size_t len,
                               size_t *written);

/**
 * Writes the mesh to the UTF-8 path `path`.
 *
 * # Safety
 * `mesh` must be a live handle and `path` a NUL-terminated string.
 */
enum HsStatus hs_mesh_export(const struct HsMesh *mesh, const char *path, enum HsMeshFormat format);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HARMSHEAR_H */
