/* fraclab - 1D fractional Laplacian laboratory.
 *
 * C interface to the solver library.  All functions returning int use the
 * status codes below; on failure fraclab_last_error() carries a message.
 */
#ifndef FRACLAB_FRACLAB_H
#define FRACLAB_FRACLAB_H

#ifdef __cplusplus
extern "C" {
#endif

#define FRACLAB_OK 0
#define FRACLAB_EVERIFY 1  /* a verification/search goal was not met */
#define FRACLAB_ECONFIG 2  /* invalid configuration or argument */
#define FRACLAB_ENUMERIC 3 /* quadrature/solver failure */

const char* fraclab_version(void);

/* Message of the last failure on this thread (empty string if none). */
const char* fraclab_last_error(void);

/* Runs a subcommand from a flat JSON config, e.g.
 *   {"command":"eval","profile":"lorentzian","s":0.5,"x":0.0}
 * Returns a status code; *report (may be NULL) receives a heap-allocated
 * JSON report to release with fraclab_free(). */
int fraclab_run(const char* config_json, char** report);
void fraclab_free(char* p);

/* Scalar entry points. */
int fraclab_kernel_constant(double s, int n, double* out);
int fraclab_c0(double s, double* out);
int fraclab_zeta(double x, double radius, double s, double* out);
int fraclab_eigen_bound(double s, int n, double measure, double* out);

/* Pointwise operator value for a named profile ("lorentzian", "sqrt",
 * "gauss") at x. */
int fraclab_pointwise(const char* profile, double s, double x, double tol,
                      double* out);

/* Dirichlet solve handle: (-Delta)^s u = f in the domain, u = 0 outside.
 * domain is "a,b" or "a,b;a2,b2"; f_preset as in the CLI ("const1", "sign",
 * "affine", "odd-affine"). */
typedef struct fraclab_solution fraclab_solution;

int fraclab_solve(const char* domain, const char* f_preset, double s,
                  double h, double big_l, fraclab_solution** out);
int fraclab_solution_size(const fraclab_solution* u);
double fraclab_solution_x(const fraclab_solution* u, int i);
double fraclab_solution_value(const fraclab_solution* u, int i);
double fraclab_solution_eval(const fraclab_solution* u, double x);
void fraclab_solution_free(fraclab_solution* u);

#ifdef __cplusplus
}
#endif

#endif /* FRACLAB_FRACLAB_H */
