#ifndef HYPERLANDAU_H
#define HYPERLANDAU_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum HlStatus {
  HL_STATUS_OK = 0,
  HL_STATUS_NULL_POINTER = 1,
  HL_STATUS_INVALID_PARAMETER = 2,
  HL_STATUS_DOMAIN_ERROR = 3,
  HL_STATUS_UNSUPPORTED_CASE = 4,
  HL_STATUS_NO_BOUND_STATES = 5,
  HL_STATUS_ANALYTIC_UNAVAILABLE = 6,
  HL_STATUS_DEGENERATE_PARAMETERS = 7,
  HL_STATUS_INDEX_ERROR = 8,
  HL_STATUS_SINGULAR_POTENTIAL = 9,
  HL_STATUS_EIGENVECTOR_FAILURE = 10,
  HL_STATUS_INVALID_GRID = 11,
  HL_STATUS_PARSE_ERROR = 12,
  HL_STATUS_IO_ERROR = 13,
  HL_STATUS_PANIC = 14,
} HlStatus;

/*
 Field families. Parameters p1, p2 are (A0, unused), (C1, D1), (C2, D2)
 and (C3, D3) respectively.
 */
typedef enum HlCase {
  HL_CASE_CONSTANT_FIELD = 0,
  HL_CASE_ECKART = 1,
  HL_CASE_POSCHL_TELLER = 2,
  HL_CASE_GENERALIZED_POSCHL_TELLER = 3,
} HlCase;

typedef enum HlComponent {
  HL_COMPONENT_G1 = 0,
  HL_COMPONENT_G2 = 1,
} HlComponent;

/*
 A field case at a fixed angular momentum.
 */
typedef struct HlProblem HlProblem;

/*
 Bound levels of a problem.
 */
typedef struct HlSpectrum HlSpectrum;

/*
 One spectrum row.
 */
typedef struct HlLevel {
  size_t n;
  double epsilon;
  double energy_plus;
  double energy_minus;
  bool is_threshold;
} HlLevel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *hl_version(void);

/*
 Message for the most recent failure on this thread; empty after a
 success. Valid until the next hl_* call on the same thread.
 */
const char *hl_last_error_message(void);

/*
 Creates a problem for a closed field family. `lambda_prime` is ignored
 for the constant field. Unless `relaxed`, 2λ must be an odd integer.
 */
enum HlStatus hl_problem_new(enum HlCase case_,
                             double p1,
                             double p2,
                             double lambda_prime,
                             double lambda,
                             bool relaxed,
                             struct HlProblem **out);

/*
 Creates a problem from `len` samples of α(u) at increasing u > 0.

 # Safety
 `u` and `alpha` must each point to `len` readable doubles.
 */
enum HlStatus hl_problem_new_tabulated(const double *u,
                                       const double *alpha,
                                       size_t len,
                                       double lambda,
                                       bool relaxed,
                                       struct HlProblem **out);

/*
 Releases a problem. Null is ignored.

 # Safety
 `problem` must come from hl_problem_new* and not be used afterwards.
 */
void hl_problem_free(struct HlProblem *problem);

/*
 Closed-form bound levels for radius `radius`.

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_spectrum(const struct HlProblem *problem, double radius, struct HlSpectrum **out);

/*
 Number of bound levels; 0 for a null handle.

 # Safety
 Pointer arguments follow the crate-level contract.
 */
size_t hl_spectrum_len(const struct HlSpectrum *spectrum);

/*
 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_spectrum_get(const struct HlSpectrum *spectrum, size_t index, struct HlLevel *out);

/*
 Releases a spectrum. Null is ignored.

 # Safety
 `spectrum` must come from hl_spectrum and not be used afterwards.
 */
void hl_spectrum_free(struct HlSpectrum *spectrum);

/*
 α(u) = qRA/(cħ).

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_alpha(const struct HlProblem *problem, double u, double *out);

/*
 b(u) = (α sinh u)′/sinh u.

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_magnetic_field(const struct HlProblem *problem, double u, double *out);

/*
 Circulation α·sinh u in flux quanta.

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_flux(const struct HlProblem *problem, double u, double *out);

/*
 Flux through the cap [0, u], excluding any pole string.

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_flux_surface(const struct HlProblem *problem, double u, double *out);

/*
 Unnormalized closed-form g₁,ₙ(u) or g₂,ₙ₋₁(u).

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_eigenfunction(const struct HlProblem *problem,
                               size_t n,
                               enum HlComponent component,
                               double u,
                               double *out);

/*
 Zero-energy state tanh^λ(u/2)·exp(−∫α), normalization free.

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_zero_mode(const struct HlProblem *problem, double u, double *out);

/*
 Whether the zero-energy state is normalizable.

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_zero_mode_admissible(const struct HlProblem *problem, bool *out);

/*
 Jacobi polynomial P_n^{(a,b)}(w) for arbitrary real a, b.
 */
enum HlStatus hl_jacobi(size_t n, double a, double b, double w, double *out);

/*
 Runs the finite-difference check on [u_min, u_max] with `points` mesh
 points and `k` levels per partner. `out_pass` receives the verdict and
 `out_max_deviation` the largest relative level deviation (may be null).

 # Safety
 Pointer arguments follow the crate-level contract.
 */
enum HlStatus hl_verify(const struct HlProblem *problem,
                        double u_min,
                        double u_max,
                        size_t points,
                        size_t k,
                        bool *out_pass,
                        double *out_max_deviation);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERLANDAU_H */
