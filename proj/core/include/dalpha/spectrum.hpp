#pragma once

#include <cstdint>
#include <vector>

#include "dalpha/digraph.hpp"
#include "dalpha/distance.hpp"

namespace dalpha {

/// Dense alpha-weighted distance matrix
///   M = alpha * diag(Tr) + (1 - alpha) * D,
/// alpha in [0, 1). At alpha = 0 this is the distance matrix itself;
/// doubling the alpha = 1/2 matrix gives the distance signless
/// Laplacian diag(Tr) + D.
struct DAlphaMatrix {
    int n = 0;
    double alpha = 0.0;
    std::vector<double> a; // row-major n*n

    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

DAlphaMatrix dalpha_matrix(const Digraph& g, double alpha);
DAlphaMatrix dalpha_matrix(const DistanceData& dd, double alpha);

struct PerronOptions {
    /// Accept once |M x - mu x|_inf <= tolerance * mu.
    double tolerance = 1e-12;
    std::int64_t max_iterations = 1000000;
    /// Power iteration runs on M + shift*I. Any positive shift makes
    /// the dominant eigenvalue strictly dominant in modulus even for
    /// periodic cases (the 2-cycle distance matrix has spectrum
    /// {1, -1}); it also never hurts the gap, since all eigenvalues
    /// other than the Perron root have real part below it.
    double shift = 1.0;
};

struct SpectralResult {
    double radius = 0.0;
    std::vector<double> perron_vector; // unit 2-norm, entrywise positive
    std::int64_t iterations = 0;
    double residual = 0.0; // |M x - radius x|_inf at acceptance
};

/// Perron root and vector of an entrywise nonnegative matrix with a
/// simple dominant eigenvalue (any D_alpha of a strongly connected
/// digraph qualifies: all off-diagonal entries are >= 1 - alpha > 0).
/// Throws ConvergenceFailure if the residual target is not met within
/// the iteration cap, InvalidParams on a negative entry.
SpectralResult perron(const std::vector<double>& row_major, int n,
                      const PerronOptions& opt = {});
SpectralResult perron(const DAlphaMatrix& m, const PerronOptions& opt = {});

/// Perron root of D_alpha(g); convenience wrapper.
double mu_alpha(const Digraph& g, double alpha, const PerronOptions& opt = {});

/// Row-sum style enclosures for the Perron root.
///
/// The row sums of D_alpha are the transmissions themselves, so
/// tr_min <= mu <= tr_max always. One more matrix-vector fold
/// sharpens this to
///   min_i f_i <= mu <= max_i f_i,
///   f_i = alpha Tr_i + (1 - alpha) T_i / Tr_i,
/// where T_i = sum_j d(i,j) Tr_j. Both enclosures collapse to the
/// exact value exactly when all transmissions agree.
struct BoundsReport {
    double alpha = 0.0;
    double lower_rowsum = 0.0;
    double upper_rowsum = 0.0;
    /// mu > alpha * tr_max strictly, for every strongly connected
    /// digraph on n >= 2 vertices.
    double trmax_bound = 0.0;
    bool distance_regular = false;
    std::vector<double> t_values; // T_i as above
};

BoundsReport row_sum_bounds(const Digraph& g, double alpha);
BoundsReport row_sum_bounds(const DistanceData& dd, double alpha);

/// All transmissions equal.
bool is_distance_regular(const Digraph& g);

} // namespace dalpha
