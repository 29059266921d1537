#include <cmath>

#include "exsym/geom.hpp"

namespace exsym {

namespace {

// two hyperbolic pairs (0, dim-2) and (1, dim-1), identity in between
MatD split_gram(int dim) {
    MatD g = MatD::Identity(dim, dim);
    g(0, 0) = g(1, 1) = g(dim - 2, dim - 2) = g(dim - 1, dim - 1) = 0.0;
    g(0, dim - 2) = g(dim - 2, 0) = 1.0;
    g(1, dim - 1) = g(dim - 1, 1) = 1.0;
    return g;
}

VecD item45(int item, int k, int l, int m, double c, const VecD& p) {
    const double r = p(0), t = p(1);
    double q = item == 4 ? c : -c;
    for (int i = 0; i < k; ++i) q += p(2 + i) * p(2 + i);
    for (int i = 0; i < l; ++i) q += p(2 + k + i) * p(2 + k + i);
    for (int i = 0; i < m; ++i) q += 0.5 * p(2 + k + l + i) * p(2 + k + l + i);

    VecD out(4 + k + 2 * l + 2 * m);
    if (item == 4) {
        out(0) = -q * std::cos(r) - (r * c + t) * std::sin(r) + c;
        out(1) = -q * std::sin(r) + (r * c + t) * std::cos(r);
        for (int i = 0; i < k; ++i) out(2 + i) = -p(2 + i);
        for (int i = 0; i < l; ++i) {
            out(2 + k + i) = p(2 + k + i) * std::cos(r);
            out(2 + k + l + i) = -p(2 + k + i) * std::sin(r);
        }
        for (int i = 0; i < m; ++i) {
            out(2 + k + 2 * l + i) = p(2 + k + l + i) * std::cos(r / 2);
            out(2 + k + 2 * l + m + i) = p(2 + k + l + i) * std::sin(r / 2);
        }
        out(2 + k + 2 * l + 2 * m) = 0.5 * (std::cos(r) - 1.0);
        out(3 + k + 2 * l + 2 * m) = 0.5 * std::sin(r);
    } else {
        out(0) = -q * std::cosh(r) - (r * c + t) * std::sinh(r) - c;
        out(1) = q * std::sinh(r) + (r * c + t) * std::cosh(r);
        for (int i = 0; i < k; ++i) out(2 + i) = -p(2 + i);
        for (int i = 0; i < l; ++i) {
            out(2 + k + i) = p(2 + k + i) * std::cosh(r);
            out(2 + k + l + i) = p(2 + k + i) * std::sinh(r);
        }
        for (int i = 0; i < m; ++i) {
            out(2 + k + 2 * l + i) = p(2 + k + l + i) * std::cosh(r / 2);
            out(2 + k + 2 * l + m + i) = -p(2 + k + l + i) * std::sinh(r / 2);
        }
        out(2 + k + 2 * l + 2 * m) = 0.5 * (std::cosh(r) - 1.0);
        out(3 + k + 2 * l + 2 * m) = 0.5 * std::sinh(r);
    }
    return out;
}

}  // namespace

EmbeddingSampler closed_form_sampler(int item, int k, int l, int m, double c, int sign2) {
    EmbeddingSampler s;
    s.tag = "item-" + std::to_string(item);
    switch (item) {
        case 1:
            s.ambient_dim = 1;
            s.param_dim = 1;
            s.gram = -MatD::Identity(1, 1);
            s.eval = [](const VecD& p) { return p; };
            break;
        case 2: {
            s.ambient_dim = 3;
            s.param_dim = 2;
            MatD g = MatD::Zero(3, 3);
            g(0, 2) = g(2, 0) = 1.0;
            g(1, 1) = sign2 >= 0 ? 1.0 : -1.0;
            s.gram = g;
            s.eval = [](const VecD& p) {
                VecD out(3);
                out << p(0), p(1) * p(1), p(1);
                return out;
            };
            break;
        }
        case 3: {
            s.ambient_dim = 5;
            s.param_dim = 3;
            MatD g = MatD::Zero(5, 5);
            g(0, 3) = g(3, 0) = 1.0;
            g(1, 4) = g(4, 1) = 1.0;
            g(2, 2) = 1.0;
            s.gram = g;
            s.eval = [](const VecD& p) {
                const double r = p(0), sp = p(1), t = p(2);
                VecD out(5);
                out << sp, -r * t + r * r * r * r / 4.0, t, r, r * r;
                return out;
            };
            break;
        }
        case 4:
        case 5: {
            if (k < 0 || l < 0 || m < 0)
                throw std::invalid_argument("closed_form_sampler: negative multiplicity");
            s.ambient_dim = 4 + k + 2 * l + 2 * m;
            s.param_dim = 2 + k + l + m;
            MatD g = split_gram(s.ambient_dim);
            if (item == 5) {
                // minus signs sit on the hat-y and hat-z blocks
                for (int i = 0; i < l; ++i) g(2 + k + l + i, 2 + k + l + i) = -1.0;
                for (int i = 0; i < m; ++i) g(2 + k + 2 * l + m + i, 2 + k + 2 * l + m + i) = -1.0;
            }
            s.gram = g;
            s.eval = [item, k, l, m, c](const VecD& p) { return item45(item, k, l, m, c, p); };
            break;
        }
        default:
            throw std::invalid_argument("closed_form_sampler: item must be 1..5");
    }
    return s;
}

VecD closed_form_embed(int item, const VecD& params, int k, int l, int m, double c) {
    const EmbeddingSampler s = closed_form_sampler(item, k, l, m, c);
    if (params.size() != s.param_dim)
        throw std::invalid_argument("closed_form_embed: parameter dimension mismatch");
    return s.eval(params);
}

}  // namespace exsym
