#pragma once

#include <span>
#include <string>

namespace fdacov {

enum class KernelFamily { Epanechnikov, Gaussian };

// Second-order univariate kernel with its moment constants
// nu2 = int u^2 k(u) du and rk = int k(u)^2 du. Constants are stored in
// closed form and cross-checked against quadrature at construction.
struct KernelSpec {
    KernelFamily family;
    double nu2;
    double rk;

    // Product-kernel constants for the bivariate (mean) and trivariate
    // (covariance) multiplicative weights.
    double nu2_mean() const { return nu2 * nu2; }
    double rk_mean() const { return rk * rk; }
    double nu2_cov() const { return nu2 * nu2 * nu2; }
    double rk_cov() const { return rk * rk * rk; }
};

KernelSpec make_kernel(KernelFamily family);
KernelFamily kernel_family_from_name(const std::string& name);
const char* kernel_family_name(KernelFamily family);

double kernel_eval(const KernelSpec& spec, double u);

// (nu2, rk)
struct KernelConstants {
    double nu2;
    double rk;
};
KernelConstants kernel_constants(const KernelSpec& spec);

// prod_l h_l^-1 k(h_l^-1 * offset_l) for d in {1,2,3}.
double product_weight(const KernelSpec& spec, std::span<const double> offsets,
                      std::span<const double> bandwidths);

} // namespace fdacov
