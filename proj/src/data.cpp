#include "fdacov/data.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fdacov/errors.hpp"
#include "fdacov/rng.hpp"

namespace fdacov {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

double parse_field(const std::string& field, int line_no, const char* name) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + name + " value '" +
                         field + "'");
    }
    return value;
}

} // namespace

PanelSample make_panel(int n, int m, std::vector<double> y, std::vector<double> u,
                       std::vector<double> z) {
    if (n < 1) throw DomainError("panel needs at least one curve");
    if (m < 2) throw DomainError("panel needs m >= 2 points per curve");
    const auto nm = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
    if (y.size() != nm || u.size() != nm || z.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("panel arrays disagree with (n, m)");
    for (double v : u)
        if (!in_unit(v)) throw DomainError("U value outside [0,1]");
    for (double v : z)
        if (!in_unit(v)) throw DomainError("Z value outside [0,1]");
    PanelSample s;
    s.n = n;
    s.m = m;
    s.y = std::move(y);
    s.u = std::move(u);
    s.z = std::move(z);
    return s;
}

PanelSample load_panel(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "curve_id,u,z,y")
        throw ParseError("expected header 'curve_id,u,z,y', got '" + line + "'");

    struct CurveRows {
        std::vector<double> u, y;
        double z = 0.0;
    };
    std::vector<CurveRows> curves;           // first-appearance order
    std::unordered_map<std::string, int> id; // curve_id -> slot

    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<std::string, 4> fields;
        std::size_t pos = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t comma = line.find(',', pos);
            if (f < 3) {
                if (comma == std::string::npos)
                    throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields");
                fields[f] = line.substr(pos, comma - pos);
                pos = comma + 1;
            } else {
                if (comma != std::string::npos)
                    throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields");
                fields[f] = line.substr(pos);
            }
        }
        const double uv = parse_field(fields[1], line_no, "u");
        const double zv = parse_field(fields[2], line_no, "z");
        const double yv = parse_field(fields[3], line_no, "y");
        if (!in_unit(uv))
            throw DomainError("line " + std::to_string(line_no) + ": u outside [0,1]");
        if (!in_unit(zv))
            throw DomainError("line " + std::to_string(line_no) + ": z outside [0,1]");

        auto [it, inserted] = id.try_emplace(fields[0], static_cast<int>(curves.size()));
        if (inserted) curves.emplace_back();
        CurveRows& c = curves[static_cast<std::size_t>(it->second)];
        if (c.u.empty()) {
            c.z = zv;
        } else if (zv != c.z) {
            throw InconsistentZ("curve '" + fields[0] + "' has varying z");
        }
        c.u.push_back(uv);
        c.y.push_back(yv);
    }

    if (curves.empty()) throw ParseError("no data rows in " + path);
    const std::size_t m = curves.front().u.size();
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].u.size() != m)
            throw RaggedPanel("curve #" + std::to_string(i) + " has " +
                              std::to_string(curves[i].u.size()) + " rows, expected " +
                              std::to_string(m));
    }
    if (m < 2) throw RaggedPanel("panels need m >= 2 rows per curve");

    const int n = static_cast<int>(curves.size());
    std::vector<double> y, u, z;
    y.reserve(curves.size() * m);
    u.reserve(curves.size() * m);
    z.reserve(curves.size());
    for (const CurveRows& c : curves) {
        u.insert(u.end(), c.u.begin(), c.u.end());
        y.insert(y.end(), c.y.begin(), c.y.end());
        z.push_back(c.z);
    }
    return make_panel(n, static_cast<int>(m), std::move(y), std::move(u), std::move(z));
}

RawCovariancePanel raw_covariances(const PanelSample& sample, const Surface2& mean_fn) {
    RawCovariancePanel raw;
    raw.n = sample.n;
    raw.m = sample.m;
    raw.big_m = sample.m * sample.m - sample.m;
    raw.entries.reserve(static_cast<std::size_t>(sample.n) * raw.big_m);
    raw.diag.reserve(static_cast<std::size_t>(sample.n) * sample.m);

    std::vector<double> resid(static_cast<std::size_t>(sample.m));
    for (int i = 0; i < sample.n; ++i) {
        const double zi = sample.z_at(i);
        for (int j = 0; j < sample.m; ++j)
            resid[static_cast<std::size_t>(j)] =
                sample.y_at(i, j) - mean_fn(sample.u_at(i, j), zi);
        for (int j = 0; j < sample.m; ++j) {
            raw.diag.push_back({i, j, sample.u_at(i, j), zi,
                                resid[static_cast<std::size_t>(j)] *
                                    resid[static_cast<std::size_t>(j)]});
            for (int k = 0; k < sample.m; ++k) {
                if (k == j) continue;
                raw.entries.push_back({i, j, k, sample.u_at(i, j), sample.u_at(i, k), zi,
                                       resid[static_cast<std::size_t>(j)] *
                                           resid[static_cast<std::size_t>(k)]});
            }
        }
    }
    return raw;
}

std::vector<QuadProduct> quadruple_products(const RawCovariancePanel& raw,
                                            const Surface3& cov_fn, int max_per_curve,
                                            std::uint64_t seed) {
    if (max_per_curve < 1) throw DomainError("max_per_curve must be >= 1");

    std::vector<QuadProduct> out;
    const std::size_t per_curve = static_cast<std::size_t>(raw.big_m);
    std::vector<double> centered(per_curve);
    std::vector<std::uint32_t> keep;

    for (int i = 0; i < raw.n; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * per_curve;
        for (std::size_t e = 0; e < per_curve; ++e) {
            const RawEntry& r = raw.entries[base + e];
            centered[e] = r.c - cov_fn(r.u1, r.u2, r.z);
        }

        // Valid quadruples ((j,k),(l,m)) require j != l and k != m.
        std::size_t count = 0;
        for (std::size_t a = 0; a < per_curve; ++a) {
            const RawEntry& ra = raw.entries[base + a];
            for (std::size_t b = 0; b < per_curve; ++b) {
                const RawEntry& rb = raw.entries[base + b];
                if (ra.j != rb.j && ra.k != rb.k) ++count;
            }
        }

        const bool subsample = count > static_cast<std::size_t>(max_per_curve);
        if (subsample) {
            keep.resize(count);
            std::iota(keep.begin(), keep.end(), 0u);
            Rng rng(rng::derive(seed, static_cast<std::uint64_t>(i)));
            for (int t = 0; t < max_per_curve; ++t) {
                const std::size_t r =
                    t + static_cast<std::size_t>(rng.below(count - static_cast<std::size_t>(t)));
                std::swap(keep[static_cast<std::size_t>(t)], keep[r]);
            }
            keep.resize(static_cast<std::size_t>(max_per_curve));
            std::sort(keep.begin(), keep.end());
        }

        std::size_t idx = 0, next_keep = 0;
        for (std::size_t a = 0; a < per_curve; ++a) {
            const RawEntry& ra = raw.entries[base + a];
            for (std::size_t b = 0; b < per_curve; ++b) {
                const RawEntry& rb = raw.entries[base + b];
                if (ra.j == rb.j || ra.k == rb.k) continue;
                const bool take =
                    !subsample || (next_keep < keep.size() && keep[next_keep] == idx);
                if (take) {
                    if (subsample) ++next_keep;
                    out.push_back({ra.u1, ra.u2, rb.u1, rb.u2, ra.z,
                                   centered[a] * centered[b]});
                }
                ++idx;
            }
        }
    }
    return out;
}

} // namespace fdacov
