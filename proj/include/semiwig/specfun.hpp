#pragma once

namespace semiwig {

struct AiryPair {
  double ai;
  double ai_prime;
};

// Ai and Ai'. Total: underflows to 0 for large positive z.
AiryPair airy(double z);

// For z >= 0 returns Ai(z)e^{zeta}, Ai'(z)e^{zeta}, zeta = 2/3 z^{3/2}.
// For z < 0 the unscaled values.
AiryPair airy_scaled(double z);

// log Ai(z) for z > -2.33 (positive part of Ai), no underflow.
double log_airy(double z);

// Mutation hook: scales the Ai(0) constant by (1 + rel). Leave at 0 outside tests.
void set_airy_constant_perturbation(double rel);

inline constexpr int kNmax = 200;

// Physicists' Hermite polynomial. Overflow gives +-inf.
double hermite(int n, double x);

// Orthonormal Hermite function (2^n n! sqrt(pi))^{-1/2} e^{-y^2/2} H_n(y).
double hermite_function(int n, double y);

// Generalized Laguerre L_n^{(a)}(x).
double laguerre(int n, double a, double x);

struct LaguerreAsymptoticParams {
  double nu;
  double t;
  double b_of_t;
  double b_squared;  // real (B(t))^2, negative for t < 1
  double alpha0;
  double beta1;
};

inline constexpr double kDeltaT = 1e-3;

LaguerreAsymptoticParams laguerre_asymptotic_params(int n, double a, double t);

// Airy-type approximation of L_n^{(a)}(nu t), nu = 4n+2a+2, leading two terms.
double laguerre_airy(int n, double a, double t);

double log_gamma(double x);

// log(n!/m!) style ratios, sqrt(m!/n!) etc go through this
inline double log_factorial(int n) { return log_gamma(n + 1.0); }

}  // namespace semiwig
