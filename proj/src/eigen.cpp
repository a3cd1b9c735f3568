#include "splitlie/eigen.hpp"

#include "splitlie/errors.hpp"

#include <algorithm>
#include <map>

namespace splitlie {

namespace {

Rational trace(const Matrix& m) {
    Rational t;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m.at(i, i);
    return t;
}

mpz_class denominator_lcm(const Matrix& m) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class den = m.at(i, j).raw().get_den();
            l = lcm(l, den);
        }
    return l;
}

// Synthetic division of a monic integer polynomial by (x - r); p must have
// r as a root.
std::vector<mpz_class> deflate(const std::vector<mpz_class>& p, const mpz_class& r) {
    const std::size_t k = p.size() - 1;
    std::vector<mpz_class> q(k);
    q[k - 1] = p[k];
    for (std::size_t i = k - 1; i >= 1; --i)
        q[i - 1] = p[i] + r * q[i];
    return q;
}

bool is_root(const std::vector<mpz_class>& p, const mpz_class& r) {
    mpz_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * r + p[i];
    return acc == 0;
}

// Integer roots (with multiplicity) of a monic integer polynomial whose roots
// are bounded by `bound` in absolute value.
std::map<mpz_class, std::size_t> integer_roots(std::vector<mpz_class> p, const mpz_class& bound) {
    std::map<mpz_class, std::size_t> roots;
    while (p.size() > 1 && p[0] == 0) {
        ++roots[0];
        p.erase(p.begin());
    }
    for (mpz_class t = 1; t <= bound && p.size() > 1; ++t) {
        if (p[0] % t != 0)
            continue;
        for (int s : {1, -1}) {
            mpz_class cand = s > 0 ? t : mpz_class(-t);
            while (p.size() > 1 && is_root(p, cand)) {
                ++roots[cand];
                p = deflate(p, cand);
            }
        }
    }
    return roots;
}

struct EigenData {
    std::vector<std::pair<Rational, std::size_t>> mults; // distinct values, ascending
    std::vector<std::pair<Rational, Subspace>> spaces;   // same order
};

EigenData eigen_data(const Matrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::DimensionMismatch, "eigenvalues of a non-square matrix");
    const std::size_t n = m.rows();
    EigenData out;
    if (n == 0)
        return out;

    // Clear denominators: rational eigenvalues of m are integer eigenvalues of
    // d*m divided by d (the characteristic polynomial of an integer matrix is
    // monic over Z, so its rational roots are integers).
    const mpz_class d = denominator_lcm(m);
    Matrix scaled = m.scaled(Rational(mpq_class(d)));
    std::vector<Rational> cp = characteristic_polynomial(scaled);
    std::vector<mpz_class> p(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i)
        p[i] = cp[i].raw().get_num();

    mpz_class bound = 0; // max row sum of |entries|: Gershgorin bound on |eigenvalue|
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row = 0;
        for (std::size_t j = 0; j < n; ++j)
            row += abs(scaled.at(i, j).raw().get_num());
        bound = std::max(bound, row);
    }

    std::size_t space_dim_total = 0;
    for (const auto& [t, mult] : integer_roots(std::move(p), bound)) {
        Rational lambda(mpq_class(t, d));
        Matrix shifted = m - Matrix::identity(n).scaled(lambda);
        Subspace space = kernel(shifted);
        space_dim_total += space.dim();
        out.mults.emplace_back(lambda, mult);
        out.spaces.emplace_back(std::move(lambda), std::move(space));
    }
    if (space_dim_total < n)
        throw Error(ErrorKind::NotSplitOverField,
                    "rational eigenspaces span only " + std::to_string(space_dim_total) + " of " +
                        std::to_string(n) + " dimensions");
    return out;
}

} // namespace

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    if (n == 0)
        return c;
    Matrix mk = m;
    c[n - 1] = -trace(mk);
    for (std::size_t k = 2; k <= n; ++k) {
        mk = m * (mk + Matrix::identity(n).scaled(c[n - k + 1]));
        c[n - k] = -(trace(mk) / Rational(static_cast<long>(k)));
    }
    return c;
}

std::vector<Rational> rational_eigenvalues(const Matrix& m) {
    EigenData data = eigen_data(m);
    std::vector<Rational> out;
    for (const auto& [value, mult] : data.mults)
        for (std::size_t i = 0; i < mult; ++i)
            out.push_back(value);
    return out;
}

std::vector<std::pair<Rational, Subspace>> eigenspaces(const Matrix& m) {
    return eigen_data(m).spaces;
}

std::vector<std::pair<Functional, Subspace>> joint_eigenspaces(const std::vector<Matrix>& ms) {
    if (ms.empty())
        throw Error(ErrorKind::InvalidInput, "joint_eigenspaces needs at least one matrix");
    const std::size_t n = ms[0].rows();
    for (const auto& m : ms)
        if (!m.is_square() || m.rows() != n)
            throw Error(ErrorKind::DimensionMismatch, "joint_eigenspaces: sizes differ");
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            if (ms[a] * ms[b] != ms[b] * ms[a])
                throw Error(ErrorKind::NonCommuting,
                            "matrices " + std::to_string(a) + " and " + std::to_string(b) +
                                " do not commute");

    std::vector<std::pair<Vec, Subspace>> current;
    current.emplace_back(Vec{}, Subspace::full(n));
    for (const auto& m : ms) {
        std::vector<std::pair<Vec, Subspace>> next;
        for (const auto& [prefix, space] : current) {
            const std::size_t k = space.dim();
            if (k == 0)
                continue;
            // Restriction of m to the (invariant) joint eigenspace, in its
            // RREF basis: column i = coordinates of m * basis_row(i).
            Matrix restricted(k, k);
            for (std::size_t i = 0; i < k; ++i) {
                Vec image = m.mul_vec(space.basis_row(i));
                auto coords = space.coords_of(image);
                if (!coords)
                    throw Error(ErrorKind::NonCommuting,
                                "joint eigenspace not invariant (inputs do not commute)");
                for (std::size_t r = 0; r < k; ++r)
                    restricted.at(r, i) = (*coords)[r];
            }
            for (auto& [value, sub] : eigenspaces(restricted)) {
                std::vector<Vec> lifted;
                for (std::size_t r = 0; r < sub.dim(); ++r) {
                    Vec u = sub.basis_row(r);
                    Vec ambient(n);
                    for (std::size_t l = 0; l < k; ++l)
                        if (!u[l].is_zero())
                            ambient = vec_add(ambient, vec_scale(u[l], space.basis_row(l)));
                    lifted.push_back(std::move(ambient));
                }
                Vec tuple = prefix;
                tuple.push_back(value);
                next.emplace_back(std::move(tuple), Subspace::span(n, lifted));
            }
        }
        current = std::move(next);
    }

    std::vector<std::pair<Functional, Subspace>> out;
    out.reserve(current.size());
    for (auto& [tuple, space] : current)
        out.emplace_back(Functional(std::move(tuple)), std::move(space));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace splitlie
