#include "popcrit/selfdual.hpp"

#include "popcrit/linalg.hpp"
#include "popcrit/wronskian.hpp"

#include <algorithm>

namespace popcrit {

Poly wdag(const std::vector<Poly>& us, const Framing& Ts) { return divided_wronskian(us, Ts); }

std::vector<Poly> complementary_wronskians(const std::vector<Poly>& basis, const Framing& Ts) {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<Poly> rest;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != k) rest.push_back(basis[j]);
        out.push_back(wdag(rest, Ts));
    }
    return out;
}

namespace {

std::vector<Poly> ascending(const PolySpace& V) { return {V.basis().rbegin(), V.basis().rend()}; }

Framing reversed(const Framing& Ts) { return {Ts.rbegin(), Ts.rend()}; }

// Coordinates of p in the given (independent) family, or nullopt.
std::optional<RatVec> coordinates(const std::vector<Poly>& family, const Poly& p) {
    int d = p.degree();
    for (const auto& f : family) d = std::max(d, f.degree());
    const int n = static_cast<int>(family.size());
    RatMat a(d + 1, RatVec(n, Rat(0)));
    RatVec b(d + 1, Rat(0));
    for (int k = 0; k < n; ++k)
        for (int r = 0; r <= family[k].degree(); ++r) a[r][k] = family[k].coeff(r);
    for (int r = 0; r <= p.degree(); ++r) b[r] = p.coeff(r);
    auto sol = solve_linear(a, b, n);
    if (!sol) return std::nullopt;
    return sol->particular;
}

Rat form(const RatMatrix& g, const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) s += x[i] * g[i][j] * y[j];
    }
    return s;
}

// Rows q_a = e_a + sum_{j>a} C_aj e_j with anti-diagonal Gram; g must vanish for a+b > dim+1 (1-based).
RatMat antidiagonalize(const RatMatrix& g) {
    const int n = static_cast<int>(g.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a + b > n - 1 && g[a][b] != 0)
                throw std::logic_error("Gram matrix is not anti-triangular");
    const bool skew = is_skew(g);
    RatMat q(n, RatVec(n, Rat(0)));
    for (int a = 0; a < n; ++a) q[a][a] = 1;
    for (int a = n - 1; a >= 0; --a) {
        for (int b = n - 2 - a; b >= a; --b) {
            if (b == a && skew) continue;
            const int j = n - 1 - b;
            q[a][j] = 0;
            Rat r0 = form(g, q[a], q[b]);
            q[a][j] = 1;
            Rat coef = form(g, q[a], q[b]) - r0;
            if (coef == 0) throw std::logic_error("degenerate pairing during anti-diagonalization");
            // (q_a, q_b) is affine in C_aj here
            q[a][j] = -r0 / coef;
            if (form(g, q[a], q[b]) != 0) throw std::logic_error("anti-diagonalization step failed");
        }
    }
    return q;
}

std::vector<Poly> combine(const RatMat& coeffs, const std::vector<Poly>& basis) {
    std::vector<Poly> out;
    for (const auto& row : coeffs) {
        Poly p;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) p += basis[k] * row[k];
        out.push_back(p);
    }
    return out;
}

std::optional<Rat> signed_root(const Rat& v, unsigned k) {
    if (v >= 0) return rat_root(v, k);
    if (k % 2 == 0) return std::nullopt;
    auto r = rat_root(-v, k);
    if (!r) return std::nullopt;
    return Rat(-*r);
}

}  // namespace

PolySpace dual_space(const PolySpace& V, const Framing& Ts) {
    if (static_cast<int>(Ts.size()) + 1 != V.dim()) throw std::invalid_argument("framing length does not match dimension");
    auto D = PolySpace::span(complementary_wronskians(ascending(V), Ts));
    if (D.dim() != V.dim()) throw std::logic_error("divided Wronskians are dependent");
    auto DD = PolySpace::span(complementary_wronskians(ascending(D), reversed(Ts)));
    if (DD != V) throw std::logic_error("double dual differs from the space");
    return D;
}

bool symmetric_framing(const Framing& Ts) {
    for (std::size_t i = 0; i < Ts.size(); ++i)
        if (!proportional(Ts[i], Ts[Ts.size() - 1 - i])) return false;
    return true;
}

bool is_selfdual(const PolySpace& V, const Framing& Ts) {
    if (!symmetric_framing(Ts)) return false;
    auto d = V.degrees_ascending();
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (d[i + 1] - d[i] != d[n - 1 - i] - d[n - 2 - i]) return false;
    try {
        return dual_space(V, Ts) == V;
    } catch (const NotDivisible&) {
        return false;
    }
}

RatMatrix gram(const std::vector<Poly>& basis, const Framing& Ts) {
    const std::size_t n = basis.size();
    auto W = complementary_wronskians(basis, Ts);
    // P[i][k] = wdag(u_i, basis without u_k)
    std::vector<std::vector<Poly>> P(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Poly> args{basis[i]};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) args.push_back(basis[j]);
            P[i][k] = wdag(args, Ts);
        }
    RatMatrix g(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        auto m = coordinates(W, basis[j]);
        if (!m) throw NotSelfdual("basis element outside the dual space");
        for (std::size_t i = 0; i < n; ++i) {
            Poly e;
            for (std::size_t k = 0; k < n; ++k)
                if ((*m)[k] != 0) e += P[i][k] * (*m)[k];
            if (e.degree() > 0) throw NotConstant("pairing is not a constant");
            g[i][j] = e.coeff(0);
        }
    }
    return g;
}

RatMatrix gram(const PolySpace& V, const Framing& Ts) { return gram(ascending(V), Ts); }

bool is_skew(const RatMatrix& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[i][j] != -g[j][i]) return false;
    return true;
}

bool is_symmetric(const RatMatrix& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[i][j] != g[j][i]) return false;
    return true;
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    return {a * o.a + b * o.b * d, a * o.b + b * o.a, d};
}

QuadScalar QuadScalar::inverse() const {
    Rat n = a * a - b * b * d;
    if (n == 0) throw std::domain_error("zero quadratic scalar");
    return {a / n, -b / n, d};
}

std::string QuadScalar::str() const {
    return to_string(a) + "+" + to_string(b) + "*sqrt(" + to_string(d) + ")";
}

std::optional<std::vector<Rat>> dar_scalars(const std::vector<Poly>& basis, const Framing& Ts) {
    const std::size_t n = basis.size();
    std::vector<Rat> a;
    for (std::size_t i = 1; i < n; ++i) {
        Poly lhs = wdag({basis.begin(), basis.begin() + i}, Ts);
        Poly rhs = wdag({basis.begin(), basis.begin() + (n - i)}, Ts);
        if (lhs.is_zero() || !proportional(lhs, rhs)) return std::nullopt;
        a.push_back(lhs.lead() / rhs.lead());
    }
    return a;
}

std::vector<Poly> antidiagonal_adjusted_basis(const Flag& flag, const Framing& Ts) {
    std::vector<Poly> r(flag.u.rbegin(), flag.u.rend());
    auto q = combine(antidiagonalize(gram(r, Ts)), r);
    return {q.rbegin(), q.rend()};
}

WittResult quasi_witt_basis(const PolySpace& V, const Framing& Ts) {
    if (!is_selfdual(V, Ts)) throw NotSelfdual("space is not selfdual");
    WittResult out;
    auto asc = antidiagonal_adjusted_basis(degree_flag(V), Ts);
    out.q.assign(asc.rbegin(), asc.rend());
    auto a = dar_scalars(out.q, Ts);
    if (!a) throw std::logic_error("anti-diagonal basis fails the isotropy relation");
    out.a = *a;

    const int n = static_cast<int>(out.q.size());
    auto W = complementary_wronskians(out.q, Ts);
    for (int i = 0; i < n; ++i) {
        const Poly& w = W[n - 1 - i];
        if (!proportional(out.q[i], w)) throw std::logic_error("q_i is not proportional to its complementary Wronskian");
        out.kappa.push_back(out.q[i].lead() / w.lead());
    }
    out.kind = "quasi";
    for (int i = 0; i < n; ++i)
        if (out.kappa[i] != out.kappa[n - 1 - i]) return out;

    const int k = n / 2;
    std::vector<Rat> lambda(n, Rat(1));
    std::optional<Rat> L;
    if (n == 2) {
        L = Rat(1);
    } else if (n % 2 == 0) {
        Rat P = 1;
        for (int i = 0; i < k; ++i) P *= out.kappa[i];
        L = signed_root(P, k - 1);
        if (!L && k - 1 == 2 && P > 0) {
            // Lambda = sqrt(P): record the rescaling over Q(sqrt P) and check its identities.
            QuadScalar lam{0, 1, P};
            std::vector<QuadScalar> s(n, QuadScalar{1, 0, P});
            for (int i = 0; i < k; ++i) s[n - 1 - i] = lam * QuadScalar{1 / out.kappa[i], 0, P};
            QuadScalar prod{1, 0, P};
            for (const auto& v : s) prod = prod * v;
            if (!(prod == lam)) throw std::logic_error("quadratic Witt rescaling is inconsistent");
            for (int i = 0; i < k; ++i)
                if (!(s[i] * s[n - 1 - i] == lam * QuadScalar{1 / out.kappa[i], 0, P}))
                    throw std::logic_error("quadratic Witt rescaling is inconsistent");
            out.scale = s;
            out.kind = "quadratic";
            return out;
        }
        if (!L) return out;
        for (int i = 0; i < k; ++i) lambda[n - 1 - i] = *L / out.kappa[i];
    } else {
        const int mid = k;  // 0-based middle
        Rat P = 1;
        for (int i = 0; i < k; ++i) P *= out.kappa[i];
        L = signed_root(P * P * out.kappa[mid], 2 * k - 1);
        if (!L) return out;
        for (int i = 0; i < k; ++i) lambda[n - 1 - i] = *L / out.kappa[i];
        Rat Lpow = 1;
        for (int e = 0; e < k - 1; ++e) Lpow *= *L;
        lambda[mid] = P / Lpow;
    }
    for (int i = 0; i < n; ++i) out.witt.push_back(out.q[i] * lambda[i]);
    auto Ww = complementary_wronskians(out.witt, Ts);
    for (int i = 0; i < n; ++i)
        if (out.witt[i] != Ww[n - 1 - i]) throw std::logic_error("Witt rescaling failed");
    out.kind = "witt";
    return out;
}

bool is_isotropic(const PolySpace& V, const Framing& Ts, const Flag& flag) {
    if (flag.u.size() != static_cast<std::size_t>(V.dim())) return false;
    for (const auto& u : flag.u)
        if (!V.contains(u)) return false;
    auto g = gram(flag.u, Ts);
    const int n = static_cast<int>(g.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; a + b <= n - 2; ++b)
            if (g[a][b] != 0) return false;
    return true;
}

std::vector<Poly> IsotropicFamily::basis_at(const Rat& c) const {
    const int n = static_cast<int>(u.size());
    const int k = n / 2;
    std::vector<Poly> v = u;
    const int a = i - 1;  // 0-based
    if (n % 2 == 1 && i == k) {
        const int m = k;  // middle, 0-based
        Rat beta = -c * c * g[m][m] / (2 * g[a][m + 1]);
        Rat gamma = -c * g[m][m] / g[a][m + 1];
        v[a] = u[a] + u[m] * c + u[m + 1] * beta;
        v[m] = u[m] + u[m + 1] * gamma;
    } else if (n % 2 == 0 && i == k) {
        v[a] = u[a] + u[a + 1] * c;
    } else {
        // partner pairs (a, n-1-a) and (a+1, n-2-a)
        Rat alpha = -c * g[a + 1][n - 2 - a] / g[a][n - 1 - a];
        v[a] = u[a] + u[a + 1] * c;
        v[n - 2 - a] = u[n - 2 - a] + u[n - 1 - a] * alpha;
    }
    return v;
}

IsotropicFamily isotropic_family(const Flag& flag, const Framing& Ts, int i) {
    const int n = static_cast<int>(flag.u.size());
    if (i < 1 || i > n / 2) throw std::invalid_argument("generator index out of range");
    IsotropicFamily fam;
    fam.i = i;
    fam.u = antidiagonal_adjusted_basis(flag, Ts);
    fam.g = gram(fam.u, Ts);
    return fam;
}

TupleY isotropic_generators(const PolySpace& V, const Framing& Ts, const Flag& flag, int i, const Rat& c) {
    if (!is_isotropic(V, Ts, flag)) throw std::invalid_argument("flag is not isotropic");
    auto fam = isotropic_family(flag, Ts, i);
    return generating_morphism_raw(Flag{fam.basis_at(c)}, Ts);
}

GeneratorCheck check_generator(const IsotropicFamily& fam, const Framing& Ts) {
    GeneratorCheck out;
    const int n = static_cast<int>(fam.u.size());
    const int k = n / 2;
    const int i = fam.i;
    auto y0 = generating_morphism_raw(Flag{fam.u}, Ts);
    auto yy = [&](int j) { return (j == 0 || j == n) ? Poly(1) : y0[j - 1]; };
    auto yc = [&](const Rat& c) { return generating_morphism_raw(Flag{fam.basis_at(c)}, Ts)[i - 1]; };
    Poly A = yc(0), Yp = yc(1), Ym = yc(-1);
    Poly B = (Yp - Ym) * Rat(1, 2);
    Poly C2 = (Yp + Ym) * Rat(1, 2) - A;
    if (n % 2 == 1 && i == k) {
        Rat a = A.lead();
        auto p = poly_sqrt(A * (1 / a));
        if (!p) throw SquareRootMissing("y_k(0) is not a constant times a square");
        Poly q = exact_div(B, *p * (2 * a));
        out.square_ok = (C2 == q * q * a) && (yc(2) == (*p + q * Rat(2)) * (*p + q * Rat(2)) * a);
        out.p = *p;
        out.q = q;
        out.wronskian_ok = proportional(wronskian({*p, q}), Ts[i - 1] * yy(i - 1));
    } else {
        if (!C2.is_zero()) return out;
        out.wronskian_ok = proportional(wronskian({A, B}), Ts[i - 1] * yy(i - 1) * yy(i + 1));
    }
    return out;
}

bool is_symmetric_tuple(const TupleY& y) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!proportional(y[i], y[y.size() - 1 - i])) return false;
    return true;
}

}  // namespace popcrit
