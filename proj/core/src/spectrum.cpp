#include "dalpha/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dalpha/errors.hpp"

namespace dalpha {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw InvalidAlpha("alpha must lie in [0,1), got " + std::to_string(alpha));
}

} // namespace

DAlphaMatrix dalpha_matrix(const DistanceData& dd, double alpha) {
    check_alpha(alpha);
    int n = dd.n;
    DAlphaMatrix m;
    m.n = n;
    m.alpha = alpha;
    m.a.resize(static_cast<std::size_t>(n) * n);
    double off = 1.0 - alpha;
    for (int i = 0; i < n; ++i) {
        const int* drow = dd.dist.data() + static_cast<std::size_t>(i) * n;
        double* mrow = m.a.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) mrow[j] = off * drow[j];
        mrow[i] = alpha * static_cast<double>(dd.transmission[i]);
    }
    return m;
}

DAlphaMatrix dalpha_matrix(const Digraph& g, double alpha) {
    check_alpha(alpha);
    return dalpha_matrix(distance_data(g), alpha);
}

SpectralResult perron(const std::vector<double>& row_major, int n, const PerronOptions& opt) {
    if (n < 1 || row_major.size() != static_cast<std::size_t>(n) * n)
        throw InvalidParams("matrix size mismatch");
    for (double v : row_major)
        if (!(v >= 0.0)) throw InvalidParams("matrix has a negative or NaN entry");

    const double* m = row_major.data();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    for (std::int64_t k = 1; k <= opt.max_iterations; ++k) {
        // One multiply by M + shift*I, Rayleigh quotient, residual.
        for (int i = 0; i < n; ++i) {
            const double* row = m + static_cast<std::size_t>(i) * n;
            double acc = opt.shift * x[i];
            for (int j = 0; j < n; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
        double mu = 0.0;
        for (int i = 0; i < n; ++i) mu += x[i] * y[i];
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::abs(y[i] - mu * x[i]));
        if (res <= opt.tolerance * mu) {
            SpectralResult out;
            out.radius = mu - opt.shift;
            out.perron_vector = x;
            out.iterations = k;
            out.residual = res;
            return out;
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += y[i] * y[i];
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw ConvergenceFailure("perron: no convergence to " + std::to_string(opt.tolerance) +
                             " within " + std::to_string(opt.max_iterations) + " iterations");
}

SpectralResult perron(const DAlphaMatrix& m, const PerronOptions& opt) {
    return perron(m.a, m.n, opt);
}

double mu_alpha(const Digraph& g, double alpha, const PerronOptions& opt) {
    return perron(dalpha_matrix(g, alpha), opt).radius;
}

BoundsReport row_sum_bounds(const DistanceData& dd, double alpha) {
    check_alpha(alpha);
    int n = dd.n;
    BoundsReport r;
    r.alpha = alpha;
    r.t_values.assign(n, 0.0);
    r.distance_regular = dd.tr_min == dd.tr_max;
    r.trmax_bound = alpha * static_cast<double>(dd.tr_max);
    if (n == 1) return r; // single vertex: everything is zero
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
        const int* drow = dd.dist.data() + static_cast<std::size_t>(i) * n;
        double t = 0.0;
        for (int j = 0; j < n; ++j) t += static_cast<double>(drow[j]) * static_cast<double>(dd.transmission[j]);
        r.t_values[i] = t;
        double tr = static_cast<double>(dd.transmission[i]);
        double f = alpha * tr + (1.0 - alpha) * t / tr;
        if (i == 0 || f < lo) lo = f;
        if (i == 0 || f > hi) hi = f;
    }
    r.lower_rowsum = lo;
    r.upper_rowsum = hi;
    return r;
}

BoundsReport row_sum_bounds(const Digraph& g, double alpha) {
    return row_sum_bounds(distance_data(g), alpha);
}

bool is_distance_regular(const Digraph& g) {
    auto dd = distance_data(g);
    return dd.tr_min == dd.tr_max;
}

} // namespace dalpha
