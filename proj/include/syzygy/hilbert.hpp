#pragma once

#include <algorithm>
#include <vector>

#include "syzygy/groebner.hpp"

namespace syzygy {

namespace detail {

inline std::vector<mpz_class> upoly_add(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline std::vector<mpz_class> upoly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline std::vector<monomial> minimal_monomials(std::vector<monomial> mons) {
    std::sort(mons.begin(), mons.end(), [](const monomial& a, const monomial& b) { return a.deg < b.deg; });
    std::vector<monomial> out;
    for (const auto& m : mons) {
        bool covered = false;
        for (const auto& o : out)
            if (o.divides(m)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(m);
    }
    return out;
}

// Numerator of the Hilbert series of S/(monomial ideal) over (1-t)^nvars.
// Splits on a frequently occurring variable via the exact sequence
// 0 -> (S/(I:x))(-1) -> S/I -> S/(I+(x)) -> 0.
inline std::vector<mpz_class> numerator_rec(std::vector<monomial> mons, int nvars) {
    mons = minimal_monomials(std::move(mons));
    if (!mons.empty() && mons.front().deg == 0) return {};
    if (mons.empty()) return {mpz_class(1)};
    if (mons.size() == 1) {
        std::vector<mpz_class> out(static_cast<std::size_t>(mons[0].deg) + 1, mpz_class(0));
        out.front() = 1;
        out.back() = -1;
        return out;
    }
    bool all_pure = true;
    for (const auto& m : mons) {
        int support = 0;
        for (int e : m.e)
            if (e > 0) ++support;
        if (support != 1) all_pure = false;
    }
    if (all_pure) {
        std::vector<mpz_class> out{mpz_class(1)};
        for (const auto& m : mons) {
            std::vector<mpz_class> f(static_cast<std::size_t>(m.deg) + 1, mpz_class(0));
            f.front() = 1;
            f.back() = -1;
            out = upoly_mul(out, f);
        }
        return out;
    }
    // Pivot on a variable from a mixed-support monomial: the plus branch then
    // strictly reduces the number of mixed monomials and the colon branch the
    // total degree, so the recursion terminates.
    int pivot = 0, best = 0;
    for (int v = 0; v < nvars; ++v) {
        int count = 0;
        for (const auto& m : mons) {
            int support = 0;
            for (int e : m.e)
                if (e > 0) ++support;
            if (support >= 2 && m.e[static_cast<std::size_t>(v)] > 0) ++count;
        }
        if (count > best) {
            best = count;
            pivot = v;
        }
    }
    check(best >= 1, "hilbert numerator pivot selection failed");
    std::vector<monomial> plus{monomial::var(nvars, pivot)};
    for (const auto& m : mons)
        if (m.e[static_cast<std::size_t>(pivot)] == 0) plus.push_back(m);
    std::vector<monomial> colon;
    for (const auto& m : mons) {
        monomial q = m;
        if (q.e[static_cast<std::size_t>(pivot)] > 0) {
            --q.e[static_cast<std::size_t>(pivot)];
            --q.deg;
        }
        colon.push_back(q);
    }
    std::vector<mpz_class> c = numerator_rec(std::move(colon), nvars);
    c.insert(c.begin(), mpz_class(0));
    return upoly_add(numerator_rec(std::move(plus), nvars), c);
}

}  // namespace detail

// Cached Hilbert series of a quotient ring: value(d) = dim (S/I)_d for every
// d >= 0, read off the numerator over (1-t)^nvars.
struct hilbert_series {
    int nvars = 0;
    std::vector<mpz_class> numerator;

    mpz_class value(int d) const {
        if (d < 0) return 0;
        mpz_class acc(0);
        for (std::size_t j = 0; j < numerator.size() && j <= static_cast<std::size_t>(d); ++j)
            acc += numerator[j] * binomial_mpz(d - static_cast<int>(j) + nvars - 1, nvars - 1);
        return acc;
    }
};

template <class K>
hilbert_series series_of(const groebner_basis<K>& gb) {
    require(gb.ring->nvars() >= 1, "hilbert series needs at least one variable");
    std::vector<monomial> lts;
    for (const auto& g : gb.gens) lts.push_back(g.lead_monomial());
    hilbert_series s;
    s.nvars = gb.ring->nvars();
    s.numerator = detail::numerator_rec(std::move(lts), s.nvars);
    return s;
}

template <class K>
mpz_class hilbert_function(const groebner_basis<K>& gb, int d) {
    return series_of(gb).value(d);
}

struct hilbert_polynomial_result {
    std::vector<mpq_class> coeffs;  // coeffs[k] multiplies m^k
    int dimension = -1;             // projective dimension of the zero set; -1 when P = 0
    mpz_class variety_degree = 0;

    mpq_class value(const mpz_class& m) const {
        mpq_class acc(0);
        mpq_class p(1);
        for (const auto& c : coeffs) {
            acc += c * p;
            p *= m;
        }
        return acc;
    }

    // Arithmetic genus read off a one-dimensional model.
    mpq_class genus() const { return mpq_class(1) - value(0); }
};

// Newton interpolation of the Hilbert polynomial from exact Hilbert function
// values.  The window starts at (max generator degree)*(#generators) capped
// at 20 and slides forward when verification past the window fails.
template <class K>
hilbert_polynomial_result hilbert_polynomial(const groebner_basis<K>& gb) {
    hilbert_series ser = series_of(gb);
    const int n = gb.ring->nvars();
    int maxdeg = 1;
    for (const auto& g : gb.gens) maxdeg = std::max(maxdeg, g.degree());
    int base = std::min(20, maxdeg * std::max<int>(1, static_cast<int>(gb.gens.size())));
    const int window = n + 4;  // dimension is at most n-1; leaves 3 slots to confirm flat differences

    for (int attempt = 0; attempt < 8; ++attempt) {
        int d0 = base + attempt * window;
        std::vector<mpq_class> samples;
        for (int i = 0; i < window; ++i) samples.emplace_back(ser.value(d0 + i));

        std::vector<std::vector<mpq_class>> table{samples};
        while (table.back().size() > 1) {
            const auto& prev = table.back();
            std::vector<mpq_class> next;
            for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
            table.push_back(std::move(next));
        }
        int deg = -1;
        for (std::size_t k = 0; k < table.size(); ++k)
            for (const auto& v : table[k])
                if (v != 0) deg = static_cast<int>(k);
        if (deg > n - 1) continue;  // window not yet in the polynomial range

        hilbert_polynomial_result out;
        if (deg >= 0) {
            // P(x) = sum_k diff_k * binomial(x - d0, k), expanded in x.
            std::vector<mpq_class> acc{mpq_class(0)};
            std::vector<mpq_class> basis{mpq_class(1)};
            mpq_class factorial(1);
            for (int k = 0; k <= deg; ++k) {
                if (k > 0) {
                    std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
                    mpq_class root(d0 + k - 1);
                    for (std::size_t i = 0; i < basis.size(); ++i) {
                        next[i + 1] += basis[i];
                        next[i] -= basis[i] * root;
                    }
                    basis = std::move(next);
                    factorial *= k;
                }
                mpq_class scale = table[static_cast<std::size_t>(k)][0] / factorial;
                if (acc.size() < basis.size()) acc.resize(basis.size(), mpq_class(0));
                for (std::size_t i = 0; i < basis.size(); ++i) acc[i] += basis[i] * scale;
            }
            while (!acc.empty() && acc.back() == 0) acc.pop_back();
            out.coeffs = std::move(acc);
        }
        out.dimension = static_cast<int>(out.coeffs.size()) - 1;

        bool ok = true;
        for (int i = 0; i < window && ok; ++i)
            if (out.value(d0 + i) != mpq_class(ser.value(d0 + i))) ok = false;
        for (int i = 0; i < 3 && ok; ++i)
            if (out.value(d0 + window + i) != mpq_class(ser.value(d0 + window + i))) ok = false;
        if (!ok) continue;

        if (out.dimension >= 0) {
            mpq_class lead = out.coeffs.back();
            for (int k = 2; k <= out.dimension; ++k) lead *= k;
            check(lead.get_den() == 1 && lead > 0, "leading Hilbert coefficient is not a positive integer multiple");
            out.variety_degree = lead.get_num();
        }
        return out;
    }
    throw inconclusive_error("hilbert polynomial window did not stabilize");
}

}  // namespace syzygy
