#pragma once

namespace tubeb {

/** Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1. */
double pochhammer(double a, int k);

/**
 * Normalization of the two-slot integral identity
 *
 *   int rho(w)^t / (rho(z,w)^r rho(w,u)^s) dV(w)
 *     = fr_constant(n,r,s,t) / rho(z,u)^{r+s-t-n-1},
 *
 * valid for r, s > 0, t > -1, r + s - t > n + 1:
 *
 *   fr_constant = 2^{n+1} pi^n Gamma(1+t) Gamma(r+s-t-n-1) / (Gamma(r) Gamma(s)).
 */
double fr_constant(int n, double r, double s, double t);

/** Whether (r, s, t) sits inside the validity window above. */
bool fr_window(int n, double r, double s, double t);

/** Kernel normalization c_alpha = Gamma(n+1+alpha) / (2^{n+1} pi^n Gamma(1+alpha)). */
double kernel_constant(int n, double alpha);

/** Mass of (1 - |xi|^2)^kappa over the unit ball of C^n: pi^n Gamma(1+kappa) / Gamma(n+1+kappa). */
double ball_weight_mass(int n, double kappa);

/** Regularized incomplete beta I_x(a, b) for a, b > 0, x in [0, 1]. */
double reg_inc_beta(double a, double b, double x);

/** Inverse of I_x(a, b) in x for u in [0, 1]. */
double inv_inc_beta(double a, double b, double u);

/** Volume of the Euclidean ball of radius t in C^n = R^{2n}: pi^n t^{2n} / n!. */
double euclidean_ball_volume(int n, double t);

}  // namespace tubeb
