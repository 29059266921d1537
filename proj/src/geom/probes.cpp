#include <cmath>

#include "exsym/geom.hpp"

namespace exsym {

namespace {

using Fn = std::function<VecD(const VecD&)>;

VecD shift(const VecD& x, int a, double d) {
    VecD y = x;
    y(a) += d;
    return y;
}

MatD jac_at(const Fn& f, const VecD& x, double h) {
    const int n = static_cast<int>(x.size());
    const VecD f0 = f(x);
    MatD j(f0.size(), n);
    for (int a = 0; a < n; ++a)
        j.col(a) = (-f(shift(x, a, 2 * h)) + 8 * f(shift(x, a, h)) - 8 * f(shift(x, a, -h)) +
                    f(shift(x, a, -2 * h))) /
                   (12 * h);
    return j;
}

MatD sym(const MatD& m) { return 0.5 * (m + m.transpose()); }

MatD metric_at(const EmbeddingSampler& s, const VecD& p) {
    const MatD j = fd_jacobian(s.eval, p);
    return sym(j.transpose() * s.gram * j);
}

// Christoffel symbols of the pullback metric; gamma[i](j, k) carries the
// upper index i. Metric derivatives by 4th-order central differences.
std::vector<MatD> christoffel(const EmbeddingSampler& s, const VecD& p, double h) {
    const int n = static_cast<int>(p.size());
    const MatD g = metric_at(s, p);
    const MatD ginv = g.inverse();
    std::vector<MatD> dg(n);
    for (int c = 0; c < n; ++c)
        dg[c] = (-metric_at(s, shift(p, c, 2 * h)) + 8 * metric_at(s, shift(p, c, h)) -
                 8 * metric_at(s, shift(p, c, -h)) + metric_at(s, shift(p, c, -2 * h))) /
                (12 * h);
    std::vector<MatD> gamma(n, MatD::Zero(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                double sum = 0.0;
                for (int l = 0; l < n; ++l)
                    sum += ginv(i, l) * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
                gamma[i](j, k) = 0.5 * sum;
            }
    return gamma;
}

struct Tensor4 {
    int n = 0;
    std::vector<double> v;
    explicit Tensor4(int dim) : n(dim), v(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {}
    double& at(int i, int j, int k, int l) { return v[((i * n + j) * n + k) * n + l]; }
    double at(int i, int j, int k, int l) const { return v[((i * n + j) * n + k) * n + l]; }
    double max_abs() const {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
};

// fully lowered curvature tensor of the pullback metric
Tensor4 riemann_lowered(const EmbeddingSampler& s, const VecD& p, double h) {
    const int n = static_cast<int>(p.size());
    const std::vector<MatD> gamma = christoffel(s, p, h);
    std::vector<std::vector<MatD>> dgamma(n);
    for (int c = 0; c < n; ++c) {
        const std::vector<MatD> gp = christoffel(s, shift(p, c, h), h);
        const std::vector<MatD> gm = christoffel(s, shift(p, c, -h), h);
        dgamma[c].resize(n);
        for (int i = 0; i < n; ++i) dgamma[c][i] = (gp[i] - gm[i]) / (2 * h);
    }
    const MatD g = metric_at(s, p);
    Tensor4 upper(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double r = dgamma[k][i](l, j) - dgamma[l][i](k, j);
                    for (int m = 0; m < n; ++m)
                        r += gamma[i](k, m) * gamma[m](l, j) - gamma[i](l, m) * gamma[m](k, j);
                    upper.at(i, j, k, l) = r;
                }
    Tensor4 low(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double r = 0.0;
                    for (int m = 0; m < n; ++m) r += g(i, m) * upper.at(m, j, k, l);
                    low.at(i, j, k, l) = r;
                }
    return low;
}

}  // namespace

MatD fd_jacobian(const Fn& f, const VecD& x) {
    const MatD jh = jac_at(f, x, kFdStep);
    const MatD jh2 = jac_at(f, x, kFdStep / 2);
    return (16.0 * jh2 - jh) / 15.0;
}

MetricSample induced_metric(const EmbeddingSampler& s, const VecD& params) {
    if (params.size() != s.param_dim)
        throw std::invalid_argument("induced_metric: parameter dimension mismatch");
    const MatD j = fd_jacobian(s.eval, params);
    const MatD gi = sym(j.transpose() * s.gram * j);
    Eigen::SelfAdjointEigenSolver<MatD> es(gi);
    MetricSample out;
    out.params = params;
    out.induced = gi;
    for (int i = 0; i < gi.rows(); ++i) {
        const double l = es.eigenvalues()(i);
        if (std::abs(l) < kSignatureEps)
            throw GeomError("induced_metric: induced gram is degenerate at the sample point");
        (l < 0 ? out.n_minus : out.n_plus) += 1;
    }
    return out;
}

MetricSample second_fundamental_and_mean_curvature(const EmbeddingSampler& s,
                                                   const VecD& params) {
    MetricSample out = induced_metric(s, params);
    const int pd = s.param_dim, ad = s.ambient_dim;
    const MatD j = fd_jacobian(s.eval, params);
    const MatD giinv = out.induced.inverse();
    const MatD pt = j * giinv * j.transpose() * s.gram;
    const MatD pn = MatD::Identity(ad, ad) - pt;

    const double h = kFdStep;
    auto hess = [&](int a, int b) -> VecD {
        if (a == b) {
            auto d2 = [&](double step) -> VecD {
                return (-s.eval(shift(params, a, 2 * step)) +
                        16 * s.eval(shift(params, a, step)) - 30 * s.eval(params) +
                        16 * s.eval(shift(params, a, -step)) -
                        s.eval(shift(params, a, -2 * step))) /
                       (12 * step * step);
            };
            return (16.0 * d2(h / 2) - d2(h)) / 15.0;
        }
        auto d2 = [&](double step) -> VecD {
            return (s.eval(shift(shift(params, a, step), b, step)) -
                    s.eval(shift(shift(params, a, step), b, -step)) -
                    s.eval(shift(shift(params, a, -step), b, step)) +
                    s.eval(shift(shift(params, a, -step), b, -step))) /
                   (4 * step * step);
        };
        return (4.0 * d2(h / 2) - d2(h)) / 3.0;
    };

    // normal frame: kernel of j^T gram
    Eigen::FullPivLU<MatD> lu(j.transpose() * s.gram);
    lu.setThreshold(1e-9);
    out.normal_frame = lu.kernel();

    out.second_fundamental.assign(static_cast<std::size_t>(pd) * pd, VecD());
    out.second_fundamental_components.assign(static_cast<std::size_t>(pd) * pd, VecD());
    VecD mean = VecD::Zero(ad);
    for (int a = 0; a < pd; ++a)
        for (int b = 0; b < pd; ++b) {
            const VecD ii = pn * (b >= a ? hess(a, b) : hess(b, a));
            out.second_fundamental[a * pd + b] = ii;
            out.second_fundamental_components[a * pd + b] =
                out.normal_frame.colPivHouseholderQr().solve(ii);
            mean += giinv(a, b) * ii;
        }
    out.mean_curvature = mean / static_cast<double>(pd);
    return out;
}

ReflectionResult normal_reflection_test(const EmbeddingSampler& s, const VecD& base,
                                        const std::vector<VecD>& probes) {
    const MetricSample ms = induced_metric(s, base);
    const VecD p0 = s.eval(base);
    const MatD j0 = fd_jacobian(s.eval, base);
    const MatD pt = j0 * ms.induced.inverse() * j0.transpose() * s.gram;
    const MatD refl = MatD::Identity(s.ambient_dim, s.ambient_dim) - 2.0 * pt;

    auto descend = [&](VecD p, const VecD& target, bool& converged) -> VecD {
        converged = false;
        for (int it = 0; it < kProjectionMaxIter; ++it) {
            const VecD r = s.eval(p) - target;
            const MatD j = fd_jacobian(s.eval, p);
            const VecD grad = j.transpose() * r;
            if (grad.cwiseAbs().maxCoeff() <= kProjectionTol) {
                converged = true;
                break;
            }
            const VecD step = (j.transpose() * j).ldlt().solve(-grad);
            p += step;
            if (step.cwiseAbs().maxCoeff() <= kProjectionTol) {
                converged = true;
                break;
            }
        }
        return p;
    };

    ReflectionResult res;
    for (const VecD& pr : probes) {
        const VecD target = p0 + refl * (s.eval(pr) - p0);
        // warm start at the probe itself; the reflected-parameter guesses
        // rescue descents that stall in the wrong basin
        const std::vector<VecD> starts{pr, 2.0 * base - pr, -pr, base};
        ReflectionProbe best;
        bool have = false;
        for (const VecD& start : starts) {
            bool converged = false;
            const VecD p = descend(start, target, converged);
            const double resid = (s.eval(p) - target).norm();
            if (!have || resid < best.residual) {
                best = {p, resid, converged};
                have = true;
            }
            if (best.converged && best.residual <= 1e-9 * (1.0 + target.norm())) break;
        }
        res.probes.push_back(best);
        res.max_residual = std::max(res.max_residual, best.residual);
        res.all_converged = res.all_converged && best.converged;
    }
    return res;
}

CurvatureReport curvature_probe(const EmbeddingSampler& s, const VecD& params) {
    const int n = s.param_dim;
    const double h = kFdStep;
    const Tensor4 rh = riemann_lowered(s, params, h);
    const Tensor4 rh2 = riemann_lowered(s, params, h / 2);

    CurvatureReport rep;
    rep.riemann_at_h = rh.max_abs();
    rep.riemann_at_half_h = rh2.max_abs();
    rep.max_riemann = rep.riemann_at_half_h;
    rep.flat = rep.max_riemann <= kFlatTol;
    rep.stable =
        std::abs(rep.riemann_at_h - rep.riemann_at_half_h) <= 0.5 * rep.max_riemann + 1e-6;

    // covariant derivative: coarser second-order differences on the tensor
    const std::vector<MatD> gamma = christoffel(s, params, h);
    std::vector<Tensor4> dr;
    dr.reserve(n);
    for (int c = 0; c < n; ++c) {
        const Tensor4 rp = riemann_lowered(s, shift(params, c, h), h);
        const Tensor4 rm = riemann_lowered(s, shift(params, c, -h), h);
        Tensor4 d(n);
        for (std::size_t t = 0; t < d.v.size(); ++t) d.v[t] = (rp.v[t] - rm.v[t]) / (2 * h);
        dr.push_back(std::move(d));
    }
    double max_nabla = 0.0;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        double v = dr[m].at(i, j, k, l);
                        for (int t = 0; t < n; ++t) {
                            v -= gamma[t](m, i) * rh2.at(t, j, k, l);
                            v -= gamma[t](m, j) * rh2.at(i, t, k, l);
                            v -= gamma[t](m, k) * rh2.at(i, j, t, l);
                            v -= gamma[t](m, l) * rh2.at(i, j, k, t);
                        }
                        max_nabla = std::max(max_nabla, std::abs(v));
                    }
    rep.max_nabla_riemann = max_nabla;
    rep.parallel = max_nabla <= kParallelTol;
    return rep;
}

}  // namespace exsym
