#include "exsym/pencil.hpp"

#include "exsym/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace exsym {

VecQ charpoly(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: square matrix required");
    const int n = m.rows();
    VecQ coeffs{Rat(1)};
    MatQ acc = MatQ::identity(n);
    for (int k = 1; k <= n; ++k) {
        acc = m * acc;
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += acc(i, i);
        const Rat ck = -tr / k;
        coeffs.push_back(ck);
        for (int i = 0; i < n; ++i) acc(i, i) += ck;
    }
    return coeffs;
}

namespace {

Rat poly_eval(const VecQ& poly, const Rat& x) {
    Rat acc(0);
    for (const Rat& c : poly) acc = acc * x + c;
    return acc;
}

// poly / (x - r), exact; the caller guarantees r is a root
VecQ deflate(const VecQ& poly, const Rat& r) {
    VecQ out;
    Rat carry(0);
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        carry = carry * r + poly[i];
        out.push_back(carry);
    }
    return out;
}

// all positive divisors, via trial division below 10^6 plus a primality
// test on the remainder
std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        fac.emplace_back(p, e);
    }
    if (n > 1) {
        if (!mpz_probab_prime_p(n.get_mpz_t(), 40))
            throw UnsupportedError("rational_roots: coefficient resists factorisation");
        fac.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        if (base * (e + 1) > 20000)
            throw UnsupportedError("rational_roots: divisor enumeration too large");
        mpz_class pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

}  // namespace

RootSplit rational_roots(const VecQ& poly) {
    if (poly.empty() || poly[0] == 0)
        throw std::invalid_argument("rational_roots: nonzero leading coefficient required");
    RootSplit out;
    VecQ cur = poly;

    int zeros = 0;
    while (cur.size() > 1 && cur.back() == 0) {
        cur.pop_back();
        ++zeros;
    }
    if (zeros) out.roots.emplace_back(Rat(0), zeros);

    while (cur.size() > 1) {
        const int deg = static_cast<int>(cur.size()) - 1;
        if (deg == 1) {
            Rat r = -cur[1] / cur[0];
            r.canonicalize();
            out.roots.emplace_back(r, 1);
            cur = {poly[0]};
            break;
        }
        if (deg == 2) {
            const Rat qa = cur[0], qb = cur[1], qc = cur[2];
            const Rat disc = qb * qb - 4 * qa * qc;
            if (disc < 0) break;
            // exact square root test on num/den separately
            const mpz_class dn = disc.get_num(), dd = disc.get_den();
            if (!mpz_perfect_square_p(dn.get_mpz_t()) || !mpz_perfect_square_p(dd.get_mpz_t()))
                break;
            mpz_class sn, sd;
            mpz_sqrt(sn.get_mpz_t(), dn.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), dd.get_mpz_t());
            Rat s(sn, sd);
            s.canonicalize();
            Rat r1 = (-qb + s) / (2 * qa), r2 = (-qb - s) / (2 * qa);
            r1.canonicalize();
            r2.canonicalize();
            const auto push = [&](const Rat& r, int mult) {
                for (auto& [rr, mm] : out.roots)
                    if (rr == r) {
                        mm += mult;
                        return;
                    }
                out.roots.emplace_back(r, mult);
            };
            if (disc == 0) {
                push(r1, 2);
            } else {
                push(r1, 1);
                push(r2, 1);
            }
            cur = {qa};
            continue;
        }
        // scale to an integer polynomial
        mpz_class scale = 1;
        for (const Rat& c : cur) scale = lcm(scale, c.get_den());
        std::vector<mpz_class> ip;
        for (const Rat& c : cur) {
            Rat s = c * Rat(scale);
            s.canonicalize();
            ip.push_back(s.get_num());
        }
        bool found = false;
        for (const mpz_class& p : divisors(ip.back())) {
            for (const mpz_class& q : divisors(ip.front())) {
                for (const int sgn : {1, -1}) {
                    Rat r(sgn * p, q);
                    r.canonicalize();
                    if (poly_eval(cur, r) != 0) continue;
                    int mult = 0;
                    while (poly_eval(cur, r) == 0) {
                        cur = deflate(cur, r);
                        ++mult;
                    }
                    bool merged = false;
                    for (auto& [rr, mm] : out.roots)
                        if (rr == r) {
                            mm += mult;
                            merged = true;
                        }
                    if (!merged) out.roots.emplace_back(r, mult);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.open_degree = static_cast<int>(cur.size()) - 1;
    return out;
}

namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// sort key: nonzeros by increasing magnitude, positive before negative on
// ties, zeros last
bool spec_less(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) return b == 0 && a != 0;
    const Rat aa = rat_abs(a), ab = rat_abs(b);
    if (aa != ab) return aa < ab;
    return a > b;
}

}  // namespace

MatQ pencil_normal_form(const MatQ& b) {
    if (!b.is_symmetric()) throw std::invalid_argument("pencil_normal_form: symmetric input required");
    const int n = b.rows();
    const RootSplit rs = rational_roots(charpoly(b));
    if (rs.open_degree > 0)
        throw UnsupportedError("pencil_normal_form: irrational spectrum");

    VecQ spec;
    for (const auto& [r, m] : rs.roots)
        for (int i = 0; i < m; ++i) spec.push_back(r);

    Rat least(0);
    for (const Rat& v : spec)
        if (v != 0 && (least == 0 || rat_abs(v) < least)) least = rat_abs(v);
    if (least == 0) return MatQ(n, n);

    std::vector<VecQ> candidates;
    for (const Rat& mu : {least, Rat(-least)}) {
        if (std::find(spec.begin(), spec.end(), mu) == spec.end()) continue;
        VecQ scaled;
        for (const Rat& v : spec) {
            Rat s = v / mu;
            s.canonicalize();
            scaled.push_back(s);
        }
        std::sort(scaled.begin(), scaled.end(), spec_less);
        candidates.push_back(std::move(scaled));
    }
    VecQ best = candidates[0];
    for (const VecQ& c : candidates)
        if (std::lexicographical_compare(best.begin(), best.end(), c.begin(), c.end()))
            best = c;
    return MatQ::diag(best);
}

namespace {

Rat rat_pow(const Rat& q, long e) {
    mpz_class num = q.get_num(), den = q.get_den();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
    }
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rat r(pn, pd);
    r.canonicalize();
    return r;
}

// g = gcd(ks), with integer u satisfying sum u_k ks_k = g
long bezout(const std::vector<long>& ks, std::vector<long>& u) {
    long g = ks[0];
    u.assign(1, 1);
    for (std::size_t i = 1; i < ks.size(); ++i) {
        long a = g, b = ks[i], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b) {
            const long q = a / b;
            std::tie(a, b) = std::make_pair(b, a - q * b);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
            std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
        }
        for (long& c : u) c *= x0;
        u.push_back(y0);
        g = a;
    }
    return g;
}

}  // namespace

bool pencil_orbit_equal(const MatQ& b1, const MatQ& b2) {
    if (!b1.is_symmetric() || !b2.is_symmetric())
        throw std::invalid_argument("pencil_orbit_equal: symmetric inputs required");
    if (b1.rows() != b2.rows()) return false;
    const int n = b1.rows();
    const VecQ c1 = charpoly(b1), c2 = charpoly(b2);

    std::vector<long> ks;
    for (int k = 1; k <= n; ++k) {
        if ((c1[k] == 0) != (c2[k] == 0)) return false;
        if (c1[k] != 0) ks.push_back(k);
    }
    if (ks.empty()) return true;  // both spectra vanish, both matrices zero

    std::vector<long> u;
    const long g = bezout(ks, u);
    std::vector<long> ms;
    for (long k : ks) ms.push_back(k / g);

    Rat mu(1);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        Rat q = c2[ks[i]] / c1[ks[i]];
        q.canonicalize();
        mu *= rat_pow(q, u[i]);
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
        Rat q = c2[ks[i]] / c1[ks[i]];
        q.canonicalize();
        if (rat_pow(mu, ms[i]) != q) return false;
    }
    return g % 2 == 1 || mu > 0;
}

MatQ cayley_orthogonal(const MatQ& a) {
    if (!a.is_antisymmetric())
        throw std::invalid_argument("cayley_orthogonal: antisymmetric input required");
    const int n = a.rows();
    const auto inv = inverse(MatQ::identity(n) - a);
    if (!inv) throw std::invalid_argument("cayley_orthogonal: singular I - a");
    return *inv * (MatQ::identity(n) + a);
}

}  // namespace exsym
