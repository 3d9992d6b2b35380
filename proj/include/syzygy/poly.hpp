#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/common.hpp"
#include "syzygy/field.hpp"

namespace syzygy {

struct monomial {
    std::vector<int> e;
    int deg = 0;

    static monomial one(int nvars) {
        monomial m;
        m.e.assign(static_cast<std::size_t>(nvars), 0);
        return m;
    }
    static monomial var(int nvars, int i, int exp = 1) {
        monomial m = one(nvars);
        m.e[static_cast<std::size_t>(i)] = exp;
        m.deg = exp;
        return m;
    }

    bool is_one() const { return deg == 0; }

    bool divides(const monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    monomial times(const monomial& m) const {
        monomial out = *this;
        for (std::size_t i = 0; i < e.size(); ++i) out.e[i] += m.e[i];
        out.deg += m.deg;
        return out;
    }

    // Quotient by a divisor; caller guarantees divisibility.
    monomial over(const monomial& m) const {
        monomial out = *this;
        for (std::size_t i = 0; i < e.size(); ++i) out.e[i] -= m.e[i];
        out.deg -= m.deg;
        return out;
    }

    static monomial lcm(const monomial& a, const monomial& b) {
        monomial out = a;
        out.deg = 0;
        for (std::size_t i = 0; i < out.e.size(); ++i) {
            out.e[i] = std::max(a.e[i], b.e[i]);
            out.deg += out.e[i];
        }
        return out;
    }

    friend bool operator==(const monomial& a, const monomial& b) { return a.e == b.e; }
    friend bool operator!=(const monomial& a, const monomial& b) { return a.e != b.e; }
};

enum class order_kind { grevlex, elimination_block };

// Shared, immutable description of a polynomial ring: variable names and the
// active monomial order.  The elimination-block order sorts the first
// `block_size` variables in front (graded reverse lexicographic within each
// block), which is exactly what elimination ideals need.
struct poly_ring {
    std::vector<std::string> names;
    order_kind kind = order_kind::grevlex;
    int block_size = 0;

    int nvars() const { return static_cast<int>(names.size()); }

    int find_var(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }

    // Positive when a is larger in the active order.
    int cmp(const monomial& a, const monomial& b) const {
        if (kind == order_kind::grevlex) return cmp_grevlex(a, b, 0, nvars());
        int c = cmp_grevlex(a, b, 0, block_size);
        if (c != 0) return c;
        return cmp_grevlex(a, b, block_size, nvars());
    }

private:
    static int cmp_grevlex(const monomial& a, const monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[static_cast<std::size_t>(i)];
            db += b.e[static_cast<std::size_t>(i)];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i) {
            int ai = a.e[static_cast<std::size_t>(i)], bi = b.e[static_cast<std::size_t>(i)];
            if (ai != bi) return ai < bi ? 1 : -1;
        }
        return 0;
    }
};

using ring_ptr = std::shared_ptr<const poly_ring>;

inline ring_ptr make_ring(std::vector<std::string> names, order_kind kind = order_kind::grevlex,
                          int block_size = 0) {
    auto r = std::make_shared<poly_ring>();
    r->names = std::move(names);
    r->kind = kind;
    r->block_size = block_size;
    return r;
}

// Standard homogeneous coordinates x0..xr of projective r-space.
inline ring_ptr make_projective_ring(int r) {
    std::vector<std::string> names;
    for (int i = 0; i <= r; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(std::move(names));
}

template <class K>
class polynomial {
public:
    polynomial() = default;
    explicit polynomial(ring_ptr ring) : ring_(std::move(ring)) {}

    static polynomial zero(ring_ptr ring) { return polynomial(std::move(ring)); }
    static polynomial constant(ring_ptr ring, const K& c) {
        polynomial p(ring);
        if (!syzygy::is_zero(c)) p.terms_.emplace_back(monomial::one(ring->nvars()), c);
        return p;
    }
    static polynomial term(ring_ptr ring, const monomial& m, const K& c) {
        polynomial p(ring);
        if (!syzygy::is_zero(c)) p.terms_.emplace_back(m, c);
        return p;
    }
    static polynomial variable(ring_ptr ring, int i) {
        return term(ring, monomial::var(ring->nvars(), i), field_traits<K>::one());
    }

    const ring_ptr& ring() const { return ring_; }
    const std::vector<std::pair<monomial, K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const monomial& lead_monomial() const {
        check(!terms_.empty(), "lead_monomial of zero polynomial");
        return terms_.front().first;
    }
    const K& lead_coeff() const {
        check(!terms_.empty(), "lead_coeff of zero polynomial");
        return terms_.front().second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg);
        return d;
    }

    bool is_homogeneous() const {
        for (const auto& [m, c] : terms_)
            if (m.deg != terms_.front().first.deg) return false;
        return true;
    }

    polynomial operator-() const {
        polynomial out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        check(a.ring_ == b.ring_ || a.is_zero() || b.is_zero(), "polynomial ring mismatch");
        polynomial out(a.ring_ ? a.ring_ : b.ring_);
        const auto& ring = *out.ring_;
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size()) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                int c = ring.cmp(a.terms_[i].first, b.terms_[j].first);
                if (c > 0) {
                    out.terms_.push_back(a.terms_[i++]);
                } else if (c < 0) {
                    out.terms_.push_back(b.terms_[j++]);
                } else {
                    K s = a.terms_[i].second + b.terms_[j].second;
                    if (!syzygy::is_zero(s)) out.terms_.emplace_back(a.terms_[i].first, s);
                    ++i;
                    ++j;
                }
            }
        }
        return out;
    }

    friend polynomial operator-(const polynomial& a, const polynomial& b) { return a + (-b); }

    polynomial scaled(const K& c) const {
        polynomial out(ring_);
        if (syzygy::is_zero(c)) return out;
        out.terms_ = terms_;
        for (auto& [m, v] : out.terms_) v = v * c;
        return out;
    }

    polynomial times_term(const monomial& m, const K& c) const {
        polynomial out(ring_);
        if (syzygy::is_zero(c)) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& [mm, v] : terms_) out.terms_.emplace_back(mm.times(m), v * c);
        return out;
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        check(a.ring_ == b.ring_ || a.is_zero() || b.is_zero(), "polynomial ring mismatch");
        polynomial out(a.ring_ ? a.ring_ : b.ring_);
        if (a.is_zero() || b.is_zero()) return out;
        std::vector<std::pair<monomial, K>> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) acc.emplace_back(ma.times(mb), ca * cb);
        out.terms_ = normalize_terms(*out.ring_, std::move(acc));
        return out;
    }

    polynomial& operator+=(const polynomial& o) { return *this = *this + o; }
    polynomial& operator-=(const polynomial& o) { return *this = *this - o; }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    friend bool operator==(const polynomial& a, const polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].first != b.terms_[i].first || !syzygy::is_zero(a.terms_[i].second - b.terms_[i].second))
                return false;
        return true;
    }
    friend bool operator!=(const polynomial& a, const polynomial& b) { return !(a == b); }

    // Over the rationals: integer coefficients with content 1 and positive
    // leading coefficient.  Over a prime field: monic.
    polynomial normalized() const {
        if (terms_.empty()) return *this;
        polynomial out = *this;
        if constexpr (field_traits<K>::is_rational) {
            mpz_class l(1);
            for (const auto& [m, c] : out.terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_class g(0);
            for (auto& [m, c] : out.terms_) {
                c = c * mpq_class(l);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
            }
            mpq_class scale = mpq_class(1) / mpq_class(g);
            if (out.terms_.front().second < 0) scale = -scale;
            for (auto& [m, c] : out.terms_) c = c * scale;
        } else {
            K inv = field_traits<K>::one() / out.terms_.front().second;
            for (auto& [m, c] : out.terms_) c = c * inv;
        }
        return out;
    }

    // Generic evaluation: substitute vals[i] for variable i inside any ring
    // supplying mul/add/scale through ctx.  Powers are computed by repeated
    // squaring on T.
    template <class T, class Ctx>
    T evaluate(const std::vector<T>& vals, const Ctx& ctx) const {
        check(vals.size() == static_cast<std::size_t>(ring_->nvars()), "evaluate: wrong count");
        T acc = ctx.zero();
        for (const auto& [m, c] : terms_) {
            T t = ctx.one();
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                T p = vals[i];
                int exp = m.e[i];
                while (exp > 0) {
                    if (exp & 1) t = ctx.mul(t, p);
                    exp >>= 1;
                    if (exp) p = ctx.mul(p, p);
                }
            }
            acc = ctx.add(acc, ctx.scale(c, t));
        }
        return acc;
    }

private:
    static std::vector<std::pair<monomial, K>> normalize_terms(const poly_ring& ring,
                                                               std::vector<std::pair<monomial, K>> acc) {
        std::sort(acc.begin(), acc.end(),
                  [&ring](const auto& a, const auto& b) { return ring.cmp(a.first, b.first) > 0; });
        std::vector<std::pair<monomial, K>> out;
        for (auto& [m, c] : acc) {
            if (!out.empty() && out.back().first == m)
                out.back().second += c;
            else
                out.emplace_back(std::move(m), c);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& t) { return syzygy::is_zero(t.second); }),
                  out.end());
        return out;
    }

    ring_ptr ring_;
    std::vector<std::pair<monomial, K>> terms_;
};

// Evaluation context whose target is another polynomial ring.
template <class K>
struct poly_eval_context {
    ring_ptr target;
    polynomial<K> zero() const { return polynomial<K>::zero(target); }
    polynomial<K> one() const { return polynomial<K>::constant(target, field_traits<K>::one()); }
    polynomial<K> mul(const polynomial<K>& a, const polynomial<K>& b) const { return a * b; }
    polynomial<K> add(const polynomial<K>& a, const polynomial<K>& b) const { return a + b; }
    polynomial<K> scale(const K& c, const polynomial<K>& p) const { return p.scaled(c); }
};

// All monomials of total degree d in n variables, listed with exponents in
// lexicographically decreasing order of exponent vectors.
inline std::vector<monomial> monomials_of_degree(int nvars, int d) {
    std::vector<monomial> out;
    if (d < 0) return out;
    monomial cur = monomial::one(nvars);
    cur.deg = d;
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == nvars - 1) {
            cur.e[static_cast<std::size_t>(var)] = rem;
            out.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur.e[static_cast<std::size_t>(var)] = k;
            rec(var + 1, rem - k);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(monomial::one(0));
        return out;
    }
    rec(0, d);
    return out;
}

// ---- text syntax ----------------------------------------------------------
//
// Terms look like `3*x0^2*x1 - x2^3`; one polynomial per line when several
// are exchanged.  The parser accepts arbitrary whitespace and rational
// coefficients written as a/b.

namespace detail {

struct token {
    enum kind { number, ident, plus, minus, star, caret, end } k;
    std::string text;
};

inline std::vector<token> lex_poly(const std::string& s) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '/') {
                std::size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                require(k > j + 1, "malformed rational coefficient");
                out.push_back({token::number, s.substr(i, k - i)});
                i = k;
            } else {
                out.push_back({token::number, s.substr(i, j - i)});
                i = j;
            }
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({token::ident, s.substr(i, j - i)});
            i = j;
            continue;
        }
        switch (c) {
            case '+': out.push_back({token::plus, "+"}); break;
            case '-': out.push_back({token::minus, "-"}); break;
            case '*': out.push_back({token::star, "*"}); break;
            case '^': out.push_back({token::caret, "^"}); break;
            default: throw input_error(std::string("unexpected character '") + c + "' in polynomial");
        }
        ++i;
    }
    out.push_back({token::end, ""});
    return out;
}

}  // namespace detail

template <class K>
polynomial<K> parse_polynomial(const ring_ptr& ring, const std::string& text) {
    auto toks = detail::lex_poly(text);
    std::size_t pos = 0;
    auto peek = [&]() -> const detail::token& { return toks[pos]; };
    auto next = [&]() -> const detail::token& { return toks[pos++]; };

    polynomial<K> result = polynomial<K>::zero(ring);
    bool first = true;
    while (peek().k != detail::token::end) {
        int sign = 1;
        if (peek().k == detail::token::plus || peek().k == detail::token::minus) {
            if (next().k == detail::token::minus) sign = -1;
        } else {
            require(first, "expected '+' or '-' between terms");
        }
        first = false;

        K coeff = field_traits<K>::one();
        monomial mono = monomial::one(ring->nvars());
        bool saw_factor = false;
        while (true) {
            if (peek().k == detail::token::number) {
                mpq_class q(next().text);
                q.canonicalize();
                coeff = coeff * field_traits<K>::from_mpq(q);
                saw_factor = true;
            } else if (peek().k == detail::token::ident) {
                int v = ring->find_var(next().text);
                require(v >= 0, "unknown variable in polynomial");
                int exp = 1;
                if (peek().k == detail::token::caret) {
                    next();
                    require(peek().k == detail::token::number, "expected exponent after '^'");
                    exp = static_cast<int>(mpz_class(next().text).get_si());
                    require(exp >= 0, "negative exponent");
                }
                mono.e[static_cast<std::size_t>(v)] += exp;
                mono.deg += exp;
                saw_factor = true;
            } else {
                break;
            }
            if (peek().k == detail::token::star) {
                next();
                continue;
            }
            break;
        }
        require(saw_factor, "empty term in polynomial");
        if (sign < 0) coeff = -coeff;
        result += polynomial<K>::term(ring, mono, coeff);
    }
    return result;
}

template <class K>
std::string to_string(const polynomial<K>& p) {
    if (p.is_zero()) return "0";
    const auto& names = p.ring()->names;
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        K a = c;
        bool neg = false;
        if constexpr (field_traits<K>::is_rational) {
            if (a < 0) {
                neg = true;
                a = -a;
            }
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string coeff = scalar_str(a);
        bool unit_coeff = (coeff == "1");
        if (m.is_one()) {
            out += coeff;
            continue;
        }
        bool emitted = false;
        if (!unit_coeff) {
            out += coeff;
            emitted = true;
        }
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (emitted) out += "*";
            out += names[i];
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
            emitted = true;
        }
    }
    return out;
}

// Substitutes a homogeneous linear form of the target ring for each source
// variable.  Rejects non-linear images; grading is preserved by construction.
template <class K>
std::vector<polynomial<K>> substitute_linear(const std::vector<polynomial<K>>& gens,
                                             const std::vector<polynomial<K>>& forms,
                                             const ring_ptr& target) {
    for (const auto& f : forms) {
        require(!f.is_zero(), "linear substitution image is zero");
        for (const auto& [m, c] : f.terms()) require(m.deg == 1, "substitution image is not linear");
    }
    poly_eval_context<K> ctx{target};
    std::vector<polynomial<K>> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        require(static_cast<std::size_t>(g.ring()->nvars()) == forms.size(),
                "substitute_linear: one form per source variable required");
        out.push_back(g.template evaluate<polynomial<K>>(forms, ctx));
    }
    return out;
}

}  // namespace syzygy
