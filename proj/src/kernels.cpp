#include "fdacov/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "fdacov/errors.hpp"

namespace fdacov {

namespace {

constexpr double kInvSqrt2Pi = 0.398942280401432677939946;

double eval_raw(KernelFamily family, double u) {
    switch (family) {
    case KernelFamily::Epanechnikov:
        return std::fabs(u) > 1.0 ? 0.0 : 0.75 * (1.0 - u * u);
    case KernelFamily::Gaussian:
        return kInvSqrt2Pi * std::exp(-0.5 * u * u);
    }
    return 0.0;
}

// Composite-Simpson check of the defining integrals. Epanechnikov is
// piecewise quadratic so Simpson is exact on [-1,1]; the Gaussian tails are
// negligible beyond |u| = 10 at the 1e-12 level this guards.
void validate_constants(const KernelSpec& spec) {
    const double lo = spec.family == KernelFamily::Epanechnikov ? -1.0 : -10.0;
    const double hi = -lo;
    const int segments = 4096;
    const double h = (hi - lo) / segments;
    double mass = 0.0, nu2 = 0.0, rk = 0.0;
    for (int s = 0; s < segments; ++s) {
        const double a = lo + s * h;
        const double um = a + 0.5 * h;
        const double b = a + h;
        const double ka = eval_raw(spec.family, a);
        const double km = eval_raw(spec.family, um);
        const double kb = eval_raw(spec.family, b);
        mass += (ka + 4.0 * km + kb);
        nu2 += (a * a * ka + 4.0 * um * um * km + b * b * kb);
        rk += (ka * ka + 4.0 * km * km + kb * kb);
    }
    const double w = h / 6.0;
    mass *= w;
    nu2 *= w;
    rk *= w;
    if (std::fabs(mass - 1.0) > 1e-10 || std::fabs(nu2 - spec.nu2) > 1e-10 ||
        std::fabs(rk - spec.rk) > 1e-10) {
        throw std::logic_error("kernel constants disagree with quadrature");
    }
}

} // namespace

KernelSpec make_kernel(KernelFamily family) {
    KernelSpec spec{family, 0.0, 0.0};
    switch (family) {
    case KernelFamily::Epanechnikov:
        spec.nu2 = 0.2; // 1/5
        spec.rk = 0.6;  // 3/5
        break;
    case KernelFamily::Gaussian:
        spec.nu2 = 1.0;
        spec.rk = 0.5 / std::sqrt(M_PI); // 1/(2 sqrt(pi))
        break;
    }
    validate_constants(spec);
    return spec;
}

KernelFamily kernel_family_from_name(const std::string& name) {
    if (name == "gaussian") return KernelFamily::Gaussian;
    if (name == "epanechnikov") return KernelFamily::Epanechnikov;
    throw ConfigError("unknown kernel family: " + name);
}

const char* kernel_family_name(KernelFamily family) {
    return family == KernelFamily::Gaussian ? "gaussian" : "epanechnikov";
}

double kernel_eval(const KernelSpec& spec, double u) {
    return eval_raw(spec.family, u);
}

KernelConstants kernel_constants(const KernelSpec& spec) {
    return {spec.nu2, spec.rk};
}

double product_weight(const KernelSpec& spec, std::span<const double> offsets,
                      std::span<const double> bandwidths) {
    if (offsets.size() != bandwidths.size())
        throw DimensionMismatch("product_weight: offsets and bandwidths differ in length");
    if (offsets.empty() || offsets.size() > 3)
        throw DimensionMismatch("product_weight: dimension must be 1, 2, or 3");
    double w = 1.0;
    for (std::size_t l = 0; l < offsets.size(); ++l) {
        const double h = bandwidths[l];
        if (!(h > 0.0)) throw InvalidBandwidth("product_weight: bandwidth must be positive");
        w *= eval_raw(spec.family, offsets[l] / h) / h;
    }
    return w;
}

} // namespace fdacov
