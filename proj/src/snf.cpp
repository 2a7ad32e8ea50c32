#include "mcg/snf.hpp"

#include "mcg/error.hpp"

#include <algorithm>
#include <map>

namespace mcg {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix out(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (size_t j = 0; j < y.cols; ++j)
                out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

mpz_class determinant(IntMatrix m) {
    if (m.rows != m.cols) throw error(errc::malformed_data, "determinant of non-square");
    size_t n = m.rows;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return n == 0 ? mpz_class(1) : mpz_class(sign * m.at(n - 1, n - 1));
}

namespace {

struct Work {
    IntMatrix m, u, v;

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= q * row b
    void add_row(size_t a, size_t b, const mpz_class& q) {
        if (q == 0) return;
        for (size_t j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
        for (size_t j = 0; j < u.cols; ++j) u.at(a, j) -= q * u.at(b, j);
    }
    // col a -= q * col b
    void add_col(size_t a, size_t b, const mpz_class& q) {
        if (q == 0) return;
        for (size_t i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
        for (size_t i = 0; i < v.rows; ++i) v.at(i, a) -= q * v.at(i, b);
    }
    void negate_row(size_t a) {
        for (size_t j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
        for (size_t j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
    }
};

// Quotient with symmetric remainder: a - q*b lies in [-b/2, b/2] for b > 0.
// Balanced residues keep the worked entries small; truncated division lets
// them grow multiplicatively from one elimination round to the next.
mpz_class sym_quot(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > b) ++q;
    return q;
}

} // namespace

SnfResult smith_normal_form(IntMatrix input) {
    Work w{std::move(input), IntMatrix::identity(0), IntMatrix::identity(0)};
    w.u = IntMatrix::identity(w.m.rows);
    w.v = IntMatrix::identity(w.m.cols);
    size_t n = std::min(w.m.rows, w.m.cols);

    bool exhausted = false;
    for (size_t t = 0; t < n && !exhausted; ++t) {
        for (;;) {
            // move the smallest nonzero entry of the trailing block to (t,t);
            // small pivots keep the elimination quotients small
            size_t pi = t, pj = t;
            bool found = false;
            for (size_t i = t; i < w.m.rows; ++i)
                for (size_t j = t; j < w.m.cols; ++j) {
                    const mpz_class& x = w.m.at(i, j);
                    if (x == 0) continue;
                    if (!found ||
                        mpz_cmpabs(x.get_mpz_t(), w.m.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                exhausted = true;
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if (w.m.at(t, t) < 0) w.negate_row(t);

            // one balanced-division sweep over the pivot column and row;
            // leftover residues are at most half the pivot, so re-pivoting
            // converges geometrically
            bool clean = true;
            for (size_t i = t + 1; i < w.m.rows; ++i) {
                const mpz_class a = w.m.at(i, t);
                if (a == 0) continue;
                w.add_row(i, t, sym_quot(a, w.m.at(t, t)));
                if (w.m.at(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < w.m.cols; ++j) {
                const mpz_class a = w.m.at(t, j);
                if (a == 0) continue;
                w.add_col(j, t, sym_quot(a, w.m.at(t, t)));
                if (w.m.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // force the pivot to divide the whole trailing block: folding a
            // bad row into row t leaves a residue smaller than the pivot for
            // the next sweep
            bool divides = true;
            for (size_t i = t + 1; i < w.m.rows && divides; ++i)
                for (size_t j = t + 1; j < w.m.cols && divides; ++j)
                    if (w.m.at(i, j) % w.m.at(t, t) != 0) {
                        w.add_row(t, i, -1);
                        divides = false;
                    }
            if (divides) break;
        }
    }

    SnfResult out;
    out.rank = 0;
    for (size_t t = 0; t < n; ++t)
        if (w.m.at(t, t) != 0) ++out.rank;
    out.d = std::move(w.m);
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    return out;
}

std::vector<mpz_class> exponent_vector(const Presentation& p, const Word& w) {
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < p.generators.size(); ++i) index[p.generators[i]] = i;
    std::vector<mpz_class> v(p.generators.size(), 0);
    for (const auto& l : w) {
        auto it = index.find(l.gen);
        if (it == index.end())
            throw error(errc::malformed_data, "unknown generator '" + l.gen + "' in word");
        v[it->second] += l.exp;
    }
    return v;
}

static IntMatrix relator_matrix(const Presentation& p) {
    IntMatrix m(p.relators.size(), p.generators.size());
    for (size_t i = 0; i < p.relators.size(); ++i) {
        auto v = exponent_vector(p, p.relators[i]);
        for (size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[j];
    }
    return m;
}

Abelianization abelianization(const Presentation& p) {
    p.validate();
    auto snf = smith_normal_form(relator_matrix(p));
    Abelianization ab;
    ab.free_rank = static_cast<int>(p.generators.size() - snf.rank);
    for (size_t t = 0; t < snf.rank; ++t)
        if (snf.d.at(t, t) > 1) ab.torsion.push_back(snf.d.at(t, t));
    return ab;
}

std::string to_string(const Abelianization& ab) {
    std::string out;
    if (ab.free_rank == 1)
        out = "Z";
    else if (ab.free_rank > 1)
        out = "Z^" + std::to_string(ab.free_rank);
    for (const auto& t : ab.torsion) {
        if (!out.empty()) out += " x ";
        out += "Z/" + t.get_str();
    }
    return out.empty() ? "0" : out;
}

bool abelian_consequence_check(const Presentation& p, const Word& w) {
    auto snf = smith_normal_form(relator_matrix(p));
    auto target = exponent_vector(p, w);
    // x * M = target has an integer solution iff (target * V) is divisible
    // entrywise by the diagonal, with zeros past the rank.
    size_t cols = p.generators.size();
    std::vector<mpz_class> tv(cols, 0);
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < cols; ++i) tv[j] += target[i] * snf.v.at(i, j);
    for (size_t j = 0; j < cols; ++j) {
        if (j < snf.rank) {
            if (tv[j] % snf.d.at(j, j) != 0) return false;
        } else if (tv[j] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace mcg
