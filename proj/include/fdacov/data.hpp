#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fdacov {

using Surface2 = std::function<double(double, double)>;
using Surface3 = std::function<double(double, double, double)>;

// Observed triples (Y_ij, U_ij, Z_i): n curves with m points each,
// U and Z living on [0,1]. Immutable after construction.
struct PanelSample {
    int n = 0;
    int m = 0;
    std::vector<double> y; // n*m, row-major by curve
    std::vector<double> u; // n*m
    std::vector<double> z; // n

    double y_at(int i, int j) const { return y[static_cast<std::size_t>(i) * m + j]; }
    double u_at(int i, int j) const { return u[static_cast<std::size_t>(i) * m + j]; }
    double z_at(int i) const { return z[static_cast<std::size_t>(i)]; }
    std::int64_t size() const { return static_cast<std::int64_t>(n) * m; }
};

// Validates invariants (m >= 2, domains, shapes) and returns the panel.
PanelSample make_panel(int n, int m, std::vector<double> y, std::vector<double> u,
                       std::vector<double> z);

// Long-format CSV with header curve_id,u,z,y; rows in any order.
PanelSample load_panel(const std::string& path);

struct RawEntry {
    int i, j, k;        // curve and within-curve indices, j != k
    double u1, u2, z;   // U_ij, U_ik, Z_i
    double c;           // raw covariance
};

struct DiagEntry {
    int i, j;
    double u, z;
    double c; // squared residual
};

// Off-diagonal raw covariances C_ijk (both orderings stored) plus the
// noise-contaminated diagonal squares.
struct RawCovariancePanel {
    int n = 0;
    int m = 0;
    int big_m = 0; // m^2 - m ordered pairs per curve
    std::vector<RawEntry> entries; // n * big_m, grouped by curve
    std::vector<DiagEntry> diag;   // n * m
};

RawCovariancePanel raw_covariances(const PanelSample& sample, const Surface2& mean_fn);

struct QuadProduct {
    double u1, u2, u3, u4, z;
    double value;
};

// Products (C_ijk - cov_fn)(C_ilm - cov_fn) over index quadruples with
// j != l and k != m; uniformly subsampled per curve above max_per_curve.
std::vector<QuadProduct> quadruple_products(const RawCovariancePanel& raw,
                                            const Surface3& cov_fn, int max_per_curve,
                                            std::uint64_t seed);

} // namespace fdacov
