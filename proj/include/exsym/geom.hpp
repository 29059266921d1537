#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exsym/catalog.hpp"
#include "exsym/extension.hpp"

namespace exsym {

using VecD = Eigen::VectorXd;
using MatD = Eigen::MatrixXd;

struct GeomError : std::runtime_error {
    explicit GeomError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric tolerances for the geometric certificates.
inline constexpr double kSignatureEps = 1e-7;
inline constexpr double kFlatTol = 1e-4;
inline constexpr double kParallelTol = 1e-3;
inline constexpr double kProjectionTol = 1e-12;
inline constexpr int kProjectionMaxIter = 50;
inline constexpr double kFdStep = 1e-3;

// Affine map p -> linear p + translation on the ambient space carrying gram.
struct AffineIsometry {
    MatD linear;
    VecD translation;
    MatD gram;

    VecD apply(const VecD& p) const { return linear * p + translation; }
    AffineIsometry after(const AffineIsometry& inner) const;
    // max |linear^T gram linear - gram|
    double isometry_defect() const;
};

// Infinitesimal isometry (A, b): the flow of p -> A p + b.
struct AffineGenerator {
    MatD linear;
    VecD translation;
    MatD gram;
};

// Ambient basis indices with theta = -1 resp. +1. Requires diagonal theta.
std::vector<int> minus_indices(const Algebra& g);
std::vector<int> plus_indices(const Algebra& g);

// Generator of x acting on the theta = -1 part: ((ad x)|_-, -D x) in the
// coordinates of minus_indices(g). x is given in ambient coordinates and must
// be supported on the theta = +1 sub-basis.
AffineGenerator phi_rep(const Algebra& g, const VecQ& x);

// exp(t (A, b)) via scaling and squaring of the homogeneous block matrix.
AffineIsometry exp_affine(const AffineGenerator& gen, double t);

// One word factor: a real combination of theta = +1 basis vectors, entries
// (ambient basis index, coefficient).
struct WordFactor {
    std::vector<std::pair<int, double>> terms;
};

// Product of the factor exponentials, leftmost factor applied last.
AffineIsometry orbit_isometry(const Algebra& g, const std::vector<WordFactor>& word);
VecD orbit_point(const Algebra& g, const std::vector<WordFactor>& word);

struct EmbeddingSampler {
    std::string tag;
    int ambient_dim = 0;
    int param_dim = 0;
    MatD gram;
    std::function<VecD(const VecD&)> eval;
};

// The printed parametrizations. Items 4 and 5 take (k, l, m, c); item 2 takes
// the sign of its definite ambient direction (+1 or -1).
EmbeddingSampler closed_form_sampler(int item, int k = 0, int l = 0, int m = 0, double c = 0.0,
                                     int sign2 = 1);
VecD closed_form_embed(int item, const VecD& params, int k = 0, int l = 0, int m = 0,
                       double c = 0.0);

// Identification of a built catalog triple with its printed parametrization:
// frame columns are the printed coordinate vectors inside the theta = -1
// part, and word(params) realises the printed parameters through orbit words.
struct CaseFrame {
    CatalogDescriptor desc;
    int item = 0;
    Algebra g;
    std::vector<int> minus;
    MatD frame;  // coordinates of minus_indices(g), columns ordered as printed
    std::function<std::vector<WordFactor>(const VecD&)> word;
    EmbeddingSampler closed;
    EmbeddingSampler orbit;
};

CaseFrame case_frame(const CatalogDescriptor& d);

// 4th-order central differences with step kFdStep, sharpened by one
// Richardson extrapolation.
MatD fd_jacobian(const std::function<VecD(const VecD&)>& f, const VecD& x);

struct MetricSample {
    VecD params;
    MatD induced;
    int n_minus = 0, n_plus = 0;
    // second fundamental form: ambient vectors II(a,b), row-major in (a,b),
    // and its components in the computed normal frame
    std::vector<VecD> second_fundamental;
    MatD normal_frame;
    std::vector<VecD> second_fundamental_components;
    VecD mean_curvature;
};

// First fundamental form and signature; throws GeomError when an eigenvalue
// of the induced gram falls below kSignatureEps in absolute value.
MetricSample induced_metric(const EmbeddingSampler& s, const VecD& params);

MetricSample second_fundamental_and_mean_curvature(const EmbeddingSampler& s, const VecD& params);

struct ReflectionProbe {
    VecD params;
    double residual = 0.0;
    bool converged = false;
};

struct ReflectionResult {
    double max_residual = 0.0;
    bool all_converged = true;
    std::vector<ReflectionProbe> probes;
};

// Reflects each probe point at the affine normal space of the base point and
// measures the distance back to the manifold by Gauss-Newton projection.
ReflectionResult normal_reflection_test(const EmbeddingSampler& s, const VecD& base,
                                        const std::vector<VecD>& probes);

struct CurvatureReport {
    double max_riemann = 0.0;
    double max_nabla_riemann = 0.0;
    bool flat = false;
    bool parallel = false;
    // residual ladder: max |R| at step h and h/2
    double riemann_at_h = 0.0;
    double riemann_at_half_h = 0.0;
    bool stable = true;
};

CurvatureReport curvature_probe(const EmbeddingSampler& s, const VecD& params);

// Point cloud export. Rows follow the given parameter list; numbers print
// with %.17g so repeated runs are byte-identical.
std::string cloud_csv(const EmbeddingSampler& s, const std::vector<VecD>& params);
std::string cloud_json(const EmbeddingSampler& s, const std::vector<VecD>& params);

// Uniform grid: per-axis `count` samples spanning [lo, hi], row-major order.
std::vector<VecD> parameter_grid(int param_dim, double lo, double hi, int count);

}  // namespace exsym
