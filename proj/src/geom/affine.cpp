#include "exsym/geom.hpp"

#include "exsym/structure.hpp"

namespace exsym {

namespace {

std::vector<int> theta_indices(const Algebra& g, const Rat& sign) {
    std::vector<int> out;
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            if (i == j) continue;
            if (g.theta(i, j) != 0)
                throw std::invalid_argument("theta is not diagonal on this basis");
        }
    for (int i = 0; i < g.dim; ++i)
        if (g.theta(i, i) == sign) out.push_back(i);
    return out;
}

}  // namespace

AffineIsometry AffineIsometry::after(const AffineIsometry& inner) const {
    return {linear * inner.linear, linear * inner.translation + translation, gram};
}

double AffineIsometry::isometry_defect() const {
    return (linear.transpose() * gram * linear - gram).cwiseAbs().maxCoeff();
}

std::vector<int> minus_indices(const Algebra& g) { return theta_indices(g, Rat(-1)); }

std::vector<int> plus_indices(const Algebra& g) { return theta_indices(g, Rat(1)); }

AffineGenerator phi_rep(const Algebra& g, const VecQ& x) {
    if (static_cast<int>(x.size()) != g.dim)
        throw std::invalid_argument("phi_rep: x has the wrong dimension");
    if (!is_extrinsic_triple(g).holds)
        throw std::invalid_argument("phi_rep: the algebra is not an extrinsic triple");
    const std::vector<int> minus = minus_indices(g);
    for (int i : minus)
        if (x[i] != 0) throw std::invalid_argument("phi_rep: x is not in the plus part");

    const int nm = static_cast<int>(minus.size());
    AffineGenerator gen;
    gen.linear = MatD::Zero(nm, nm);
    gen.translation = VecD::Zero(nm);
    gen.gram = MatD::Zero(nm, nm);

    for (int j = 0; j < nm; ++j) {
        VecQ e(g.dim, Rat(0));
        e[minus[j]] = 1;
        const VecQ br = g.bracket.apply(x, e);
        for (int i = 0; i < nm; ++i) gen.linear(i, j) = br[minus[i]].get_d();
    }
    const VecQ dx = g.D * x;
    for (int i = 0; i < nm; ++i) gen.translation(i) = -dx[minus[i]].get_d();
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j) gen.gram(i, j) = g.gram(minus[i], minus[j]).get_d();
    return gen;
}

AffineIsometry exp_affine(const AffineGenerator& gen, double t) {
    const int n = static_cast<int>(gen.linear.rows());
    MatD h = MatD::Zero(n + 1, n + 1);
    h.topLeftCorner(n, n) = t * gen.linear;
    h.topRightCorner(n, 1) = t * gen.translation;

    int squarings = 0;
    double norm = h.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.5) {
        h *= 0.5;
        norm *= 0.5;
        ++squarings;
    }
    MatD result = MatD::Identity(n + 1, n + 1);
    MatD term = MatD::Identity(n + 1, n + 1);
    for (int k = 1; k <= 30; ++k) {
        term = term * h / static_cast<double>(k);
        result += term;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;

    AffineIsometry out;
    out.linear = result.topLeftCorner(n, n);
    out.translation = result.topRightCorner(n, 1);
    out.gram = gen.gram;
    return out;
}

AffineIsometry orbit_isometry(const Algebra& g, const std::vector<WordFactor>& word) {
    const std::vector<int> minus = minus_indices(g);
    const int nm = static_cast<int>(minus.size());
    AffineIsometry acc;
    acc.linear = MatD::Identity(nm, nm);
    acc.translation = VecD::Zero(nm);
    acc.gram = MatD::Zero(nm, nm);
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j) acc.gram(i, j) = g.gram(minus[i], minus[j]).get_d();

    for (const WordFactor& f : word) {
        AffineGenerator gen;
        gen.linear = MatD::Zero(nm, nm);
        gen.translation = VecD::Zero(nm);
        gen.gram = acc.gram;
        for (const auto& [idx, coeff] : f.terms) {
            if (idx < 0 || idx >= g.dim)
                throw std::invalid_argument("orbit_isometry: basis index out of range");
            VecQ e(g.dim, Rat(0));
            e[idx] = 1;
            const AffineGenerator unit = phi_rep(g, e);
            gen.linear += coeff * unit.linear;
            gen.translation += coeff * unit.translation;
        }
        acc = acc.after(exp_affine(gen, 1.0));
    }
    return acc;
}

VecD orbit_point(const Algebra& g, const std::vector<WordFactor>& word) {
    const AffineIsometry iso = orbit_isometry(g, word);
    return iso.translation;
}

}  // namespace exsym
