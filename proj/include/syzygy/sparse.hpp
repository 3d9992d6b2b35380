#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "syzygy/common.hpp"
#include "syzygy/field.hpp"

namespace syzygy {

// Sparse exact matrix over K (rows of sorted (col, scalar) pairs, no stored
// zeros).  Immutable once built apart from the add() accumulation phase.
template <class K>
class sparse_matrix {
public:
    sparse_matrix() : rows_(0), cols_(0) {}
    sparse_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add(std::size_t r, std::size_t c, const K& v) {
        check(r < rows_ && c < cols_, "sparse_matrix::add: index out of range");
        if (is_zero(v)) return;
        data_[r].emplace_back(static_cast<int>(c), v);
        dirty_ = true;
    }

    const std::vector<std::pair<int, K>>& row(std::size_t r) const {
        const_cast<sparse_matrix*>(this)->normalize();
        return data_[r];
    }

    std::size_t entry_count() const {
        const_cast<sparse_matrix*>(this)->normalize();
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    K at(std::size_t r, std::size_t c) const {
        for (const auto& [col, v] : row(r))
            if (col == static_cast<int>(c)) return v;
        return field_traits<K>::zero();
    }

    static sparse_matrix identity(std::size_t n) {
        sparse_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.add(i, i, field_traits<K>::one());
        return m;
    }

    static sparse_matrix from_dense(const std::vector<std::vector<long>>& d) {
        std::size_t r = d.size(), c = r ? d[0].size() : 0;
        sparse_matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (d[i][j] != 0) m.add(i, j, field_traits<K>::from_int(d[i][j]));
        return m;
    }

    std::vector<K> mul_vec(const std::vector<K>& x) const {
        check(x.size() == cols_, "mul_vec: dimension mismatch");
        std::vector<K> y(rows_, field_traits<K>::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [c, v] : row(i)) y[i] += v * x[c];
        return y;
    }

    friend bool operator==(const sparse_matrix& a, const sparse_matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.rows_; ++i)
            if (a.row(i) != b.row(i)) return false;
        return true;
    }
    friend bool operator!=(const sparse_matrix& a, const sparse_matrix& b) { return !(a == b); }

    // Columns as dense vectors; used to feed image spans into basis extension.
    std::vector<std::vector<K>> dense_columns() const {
        std::vector<std::vector<K>> cols(cols_, std::vector<K>(rows_, field_traits<K>::zero()));
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [c, v] : row(i)) cols[c][i] = v;
        return cols;
    }

private:
    void normalize() {
        if (!dirty_) return;
        for (auto& r : data_) {
            std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::pair<int, K>> out;
            for (const auto& [c, v] : r) {
                if (!out.empty() && out.back().first == c)
                    out.back().second += v;
                else
                    out.emplace_back(c, v);
            }
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [](const auto& e) { return is_zero(e.second); }),
                      out.end());
            r = std::move(out);
        }
        dirty_ = false;
    }

    std::size_t rows_, cols_;
    std::vector<std::vector<std::pair<int, K>>> data_;
    bool dirty_ = false;
};

template <class K>
sparse_matrix<K> compose(const sparse_matrix<K>& a, const sparse_matrix<K>& b) {
    require(a.cols() == b.rows(), "compose: inner dimensions differ");
    sparse_matrix<K> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<std::pair<int, K>> acc;
        for (const auto& [k, av] : a.row(i))
            for (const auto& [j, bv] : b.row(k)) acc.emplace_back(j, av * bv);
        for (const auto& [j, v] : acc) out.add(i, j, v);
    }
    out.entry_count();  // force zero-drop normalization
    return out;
}

template <class K>
bool is_zero_matrix(const sparse_matrix<K>& m) {
    return m.entry_count() == 0;
}

namespace detail {

inline void strip_row_content(std::vector<std::pair<int, mpz_class>>& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
    if (row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
}

// One elimination row in the fraction-free working form.
template <class E>
struct work_row {
    std::vector<std::pair<int, E>> entries;  // sorted by column
    std::size_t origin;                      // original row index, for tie-breaks
};

template <class E>
std::vector<std::pair<int, E>> combine_rows(const std::vector<std::pair<int, E>>& a, const E& ca,
                                            const std::vector<std::pair<int, E>>& b, const E& cb) {
    // ca*a + cb*b with merged sorted columns.
    std::vector<std::pair<int, E>> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            E v = ca * a[i].second;
            if (!(v == E(0))) out.emplace_back(a[i].first, v);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            E v = cb * b[j].second;
            if (!(v == E(0))) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            E v = ca * a[i].second + cb * b[j].second;
            if (!(v == E(0))) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

template <class K>
struct rank_kernel_result {
    std::size_t rank = 0;
    std::vector<std::vector<K>> kernel;  // right kernel basis, each of length cols
};

// Exact rank and right kernel.  Over the rationals the elimination is
// fraction-free: each row is cleared to a primitive integer row and updates
// use cross-multiplication, which keeps entries integral and modest.
// Pivoting is deterministic: leftmost eligible column, then the shortest
// active row, then the smallest original row index.
template <class K>
rank_kernel_result<K> rank_kernel(const sparse_matrix<K>& m) {
    using E = std::conditional_t<field_traits<K>::is_rational, mpz_class, fp>;

    std::vector<detail::work_row<E>> active;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto& r = m.row(i);
        if (r.empty()) continue;
        detail::work_row<E> w;
        w.origin = i;
        if constexpr (field_traits<K>::is_rational) {
            mpz_class l(1);
            for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
            for (const auto& [c, v] : r) {
                mpz_class num = v.get_num() * (l / v.get_den());
                w.entries.emplace_back(c, num);
            }
            detail::strip_row_content(w.entries);
        } else {
            for (const auto& [c, v] : r) w.entries.emplace_back(c, v);
        }
        active.push_back(std::move(w));
    }

    std::vector<detail::work_row<E>> echelon;
    std::vector<int> pivot_col;
    for (int col = 0; col < static_cast<int>(m.cols()) && !active.empty(); ++col) {
        std::size_t best = active.size();
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (active[i].entries.front().first != col) continue;
            if (best == active.size() ||
                active[i].entries.size() < active[best].entries.size() ||
                (active[i].entries.size() == active[best].entries.size() &&
                 active[i].origin < active[best].origin))
                best = i;
        }
        if (best == active.size()) continue;
        detail::work_row<E> piv = std::move(active[best]);
        active.erase(active.begin() + static_cast<long>(best));
        E plead = piv.entries.front().second;
        std::vector<detail::work_row<E>> next;
        next.reserve(active.size());
        for (auto& w : active) {
            if (w.entries.front().first == col) {
                E wlead = w.entries.front().second;
                if constexpr (field_traits<K>::is_rational) {
                    w.entries = detail::combine_rows<E>(w.entries, plead, piv.entries, -wlead);
                    detail::strip_row_content(w.entries);
                } else {
                    w.entries = detail::combine_rows<E>(w.entries, fp(1), piv.entries, -(wlead / plead));
                }
            }
            if (!w.entries.empty()) next.push_back(std::move(w));
        }
        active = std::move(next);
        echelon.push_back(std::move(piv));
        pivot_col.push_back(col);
    }

    rank_kernel_result<K> out;
    out.rank = echelon.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> x(m.cols(), field_traits<K>::zero());
        x[f] = field_traits<K>::one();
        for (std::size_t i = echelon.size(); i-- > 0;) {
            K dot = field_traits<K>::zero();
            for (const auto& [c, v] : echelon[i].entries) {
                if (c == pivot_col[i]) continue;
                if constexpr (field_traits<K>::is_rational)
                    dot += mpq_class(v) * x[c];
                else
                    dot += v * x[c];
            }
            K lead;
            if constexpr (field_traits<K>::is_rational)
                lead = mpq_class(echelon[i].entries.front().second);
            else
                lead = echelon[i].entries.front().second;
            x[static_cast<std::size_t>(pivot_col[i])] = -dot / lead;
        }
        if constexpr (field_traits<K>::is_rational) {
            mpz_class l(1);
            for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
            mpz_class g(0);
            std::vector<mpz_class> ints;
            ints.reserve(x.size());
            for (const auto& v : x) {
                ints.push_back(mpz_class(v.get_num() * (l / v.get_den())));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
            }
            int sign = 1;
            for (const auto& v : ints)
                if (v != 0) {
                    sign = (v < 0) ? -1 : 1;
                    break;
                }
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = mpq_class(ints[i] * sign / g);
        } else {
            fp first;
            bool found = false;
            for (const auto& v : x)
                if (!v.is_zero()) {
                    first = v;
                    found = true;
                    break;
                }
            if (found)
                for (auto& v : x) v = v / first;
        }
        out.kernel.push_back(std::move(x));
    }

    check(out.rank + out.kernel.size() == m.cols(), "rank_kernel: rank-nullity mismatch");
    return out;
}

template <class K>
std::size_t rank_of(const sparse_matrix<K>& m) {
    return rank_kernel(m).rank;
}

// Incremental row-reduction workspace used for basis extension and for
// membership of a vector in a span.
template <class K>
class span_builder {
public:
    explicit span_builder(std::size_t dim) : dim_(dim) {}

    // Reduces v against the stored vectors; returns true (and stores the
    // residue) when v enlarges the span.
    bool insert(std::vector<K> v) {
        check(v.size() == dim_, "span_builder: dimension mismatch");
        for (const auto& [pos, w] : reduced_) {
            if (is_zero(v[pos])) continue;
            K c = v[pos] / w[pos];
            for (std::size_t i = pos; i < dim_; ++i) v[i] -= c * w[i];
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!is_zero(v[i])) {
                reduced_.emplace_back(i, std::move(v));
                std::sort(reduced_.begin(), reduced_.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                return true;
            }
        }
        return false;
    }

    bool contains(std::vector<K> v) const {
        for (const auto& [pos, w] : reduced_) {
            if (is_zero(v[pos])) continue;
            K c = v[pos] / w[pos];
            for (std::size_t i = pos; i < dim_; ++i) v[i] -= c * w[i];
        }
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }

    std::size_t rank() const { return reduced_.size(); }

private:
    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<K>>> reduced_;  // (pivot position, vector)
};

// Indices of candidates that extend span(prefix) to span(prefix + candidates),
// scanning candidates in order.  Deterministic completion used to pick
// cohomology representatives inside a kernel.
template <class K>
std::vector<std::size_t> extend_basis(const std::vector<std::vector<K>>& prefix,
                                      const std::vector<std::vector<K>>& candidates,
                                      std::size_t dim) {
    span_builder<K> span(dim);
    for (const auto& v : prefix) span.insert(v);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (span.insert(candidates[i])) chosen.push_back(i);
    return chosen;
}

// One exact solution of A x = b (free variables set to zero), or nullopt if
// the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const sparse_matrix<K>& a, const std::vector<K>& b) {
    check(b.size() == a.rows(), "solve: dimension mismatch");
    std::size_t n = a.cols();
    std::vector<std::vector<K>> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<K> r(n + 1, field_traits<K>::zero());
        for (const auto& [c, v] : a.row(i)) r[static_cast<std::size_t>(c)] = v;
        r[n] = b[i];
        rows.push_back(std::move(r));
    }
    std::vector<std::size_t> pivot_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (!is_zero(rows[i][col])) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || is_zero(rows[i][col])) continue;
            K c = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j <= n; ++j) rows[i][j] -= c * rows[rank][j];
        }
        pivot_of_row.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (!is_zero(rows[i][n])) return std::nullopt;
    std::vector<K> x(n, field_traits<K>::zero());
    for (std::size_t i = 0; i < rank; ++i)
        x[pivot_of_row[i]] = rows[i][n] / rows[i][pivot_of_row[i]];
    return x;
}

}  // namespace syzygy
