#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzygy/section_module.hpp"

namespace syzygy {

// Koszul-type complex attached to a graded module M over Sym(V):
//   ... -> wedge^{p+1} V (x) M_{q-1} -> wedge^p V (x) M_q -> wedge^{p-1} V (x) M_{q+1} -> ...
// K_{p,q} is the middle cohomology.  Wedge basis vectors are strictly
// increasing index tuples in lexicographic order; the basis of a chain space
// enumerates wedge tuples outermost and module basis innermost.
template <class K>
class koszul_engine {
public:
    explicit koszul_engine(const graded_module<K>& M) : M_(&M) {}

    const graded_module<K>& module() const { return *M_; }
    int vdim() const { return M_->vdim; }

    int chain_dim(int p, int q) const {
        if (p < 0 || p > vdim()) return 0;
        return static_cast<int>(binomial(static_cast<std::size_t>(vdim()), static_cast<std::size_t>(p))) *
               M_->dim(q);
    }

    // Matrix of e_S (x) f  ->  sum_j (-1)^j e_{S minus i_j} (x) (v_{i_j} f)
    // with j the 1-based position of the dropped index.
    const sparse_matrix<K>& differential(int p, int q) {
        auto key = std::make_pair(p, q);
        auto it = diff_.find(key);
        if (it != diff_.end()) return it->second;

        int dq = M_->dim(q);
        if (p >= 1 && dq > 0)
            require(q >= M_->q_lo && q + 1 <= M_->q_hi,
                    M_->label + ": differential at (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                        ") needs pieces " + std::to_string(q) + " and " + std::to_string(q + 1) +
                        " in the window");
        int dq1 = (q + 1 <= M_->q_hi && q + 1 >= M_->q_lo) ? M_->dim(q + 1) : 0;
        auto tuples = index_subsets(vdim(), p);
        auto targets = p >= 1 ? index_subsets(vdim(), p - 1) : std::vector<std::vector<int>>{};
        sparse_matrix<K> D(targets.size() * static_cast<std::size_t>(dq1),
                           tuples.size() * static_cast<std::size_t>(dq));
        if (p >= 1 && dq > 0 && dq1 > 0) {
            for (std::size_t s_idx = 0; s_idx < tuples.size(); ++s_idx) {
                const auto& S = tuples[s_idx];
                for (int j = 1; j <= p; ++j) {
                    std::vector<int> T;
                    for (int a = 0; a < p; ++a)
                        if (a != j - 1) T.push_back(S[static_cast<std::size_t>(a)]);
                    std::size_t t_idx = subset_rank(T, vdim());
                    K sgn = (j % 2 == 1) ? K(-1) : K(1);
                    const auto& A = M_->mul(S[static_cast<std::size_t>(j - 1)], q);
                    for (std::size_t row = 0; row < A.rows(); ++row)
                        for (const auto& [col, val] : A.row(row))
                            D.add(t_idx * static_cast<std::size_t>(dq1) + row,
                                  s_idx * static_cast<std::size_t>(dq) + static_cast<std::size_t>(col),
                                  sgn * val);
                }
            }
        }
        return diff_.emplace(key, std::move(D)).first->second;
    }

    int rank(int p, int q) {
        if (p < 0 || p > vdim() || M_->dim(q) == 0) return 0;
        auto key = std::make_pair(p, q);
        auto it = rank_.find(key);
        if (it != rank_.end()) return it->second;
        auto rk = rank_kernel(differential(p, q));
        rank_.emplace(key, static_cast<int>(rk.rank));
        kernel_.emplace(key, std::move(rk.kernel));
        return rank_[key];
    }

    const std::vector<std::vector<K>>& kernel(int p, int q) {
        rank(p, q);
        return kernel_[std::make_pair(p, q)];
    }

    // k_{p,q} = dim ker d_{p,q} - rank d_{p+1,q-1}; callers asking for a
    // cohomology value must have the full three-piece window available.
    int cohomology_dim(int p, int q) {
        if (p < 0 || p > vdim()) return 0;
        require(q - 1 >= M_->q_lo && q + 1 <= M_->q_hi,
                M_->label + ": K_{" + std::to_string(p) + "," + std::to_string(q) + "} needs pieces " +
                    std::to_string(q - 1) + ".." + std::to_string(q + 1) + " in the window [" +
                    std::to_string(M_->q_lo) + "," + std::to_string(M_->q_hi) + "]");
        int kerdim = chain_dim(p, q) - rank(p, q);
        int img = rank(p + 1, q - 1);
        // d compose d = 0, checked once per cell.
        if (chain_dim(p + 1, q - 1) > 0 && chain_dim(p, q) > 0)
            check(is_zero_matrix(compose(differential(p, q), differential(p + 1, q - 1))),
                  M_->label + ": differentials do not compose to zero");
        int out = kerdim - img;
        check(out >= 0, M_->label + ": negative cohomology dimension");
        return out;
    }

    // Deterministic cocycle representatives: kernel vectors completing the
    // incoming image to the full kernel, chosen in kernel-listing order.
    const std::vector<std::vector<K>>& representatives(int p, int q) {
        auto key = std::make_pair(p, q);
        auto it = reps_.find(key);
        if (it != reps_.end()) return it->second;
        int expected = cohomology_dim(p, q);
        const auto& img_basis = image_basis(p, q);
        const auto& ker = kernel(p, q);
        auto picked = extend_basis(img_basis, ker, static_cast<std::size_t>(chain_dim(p, q)));
        std::vector<std::vector<K>> reps;
        for (auto i : picked) reps.push_back(ker[i]);
        check(static_cast<int>(reps.size()) == expected, M_->label + ": representative count mismatch");
        return reps_.emplace(key, std::move(reps)).first->second;
    }

    // Independent columns of the incoming differential, the coboundary space
    // inside the chains at (p, q).
    const std::vector<std::vector<K>>& image_basis(int p, int q) {
        auto key = std::make_pair(p, q);
        auto it = image_.find(key);
        if (it != image_.end()) return it->second;
        std::vector<std::vector<K>> cols;
        if (chain_dim(p + 1, q - 1) > 0 && chain_dim(p, q) > 0)
            cols = differential(p + 1, q - 1).dense_columns();
        auto picked = extend_basis(std::vector<std::vector<K>>{}, cols, static_cast<std::size_t>(chain_dim(p, q)));
        std::vector<std::vector<K>> basis;
        for (auto i : picked) basis.push_back(cols[i]);
        check(static_cast<int>(basis.size()) == rank(p + 1, q - 1), M_->label + ": image basis size mismatch");
        return image_.emplace(key, std::move(basis)).first->second;
    }

    // Coordinates of a cocycle's class in the representative basis: solve
    // [reps | image] x = chain and read the representative block.
    std::vector<K> class_coords(int p, int q, const std::vector<K>& chain) {
        const auto& reps = representatives(p, q);
        const auto& img = image_basis(p, q);
        std::size_t n = static_cast<std::size_t>(chain_dim(p, q));
        check(chain.size() == n, M_->label + ": chain vector has wrong length");
        sparse_matrix<K> A(n, reps.size() + img.size());
        for (std::size_t j = 0; j < reps.size(); ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (!is_zero(reps[j][i])) A.add(i, j, reps[j][i]);
        for (std::size_t j = 0; j < img.size(); ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (!is_zero(img[j][i])) A.add(i, reps.size() + j, img[j][i]);
        auto sol = solve(A, chain);
        check(sol.has_value(), M_->label + ": vector is not a cocycle class member");
        return std::vector<K>(sol->begin(), sol->begin() + static_cast<long>(reps.size()));
    }

private:
    const graded_module<K>* M_;
    std::map<std::pair<int, int>, sparse_matrix<K>> diff_;
    std::map<std::pair<int, int>, int> rank_;
    std::map<std::pair<int, int>, std::vector<std::vector<K>>> kernel_;
    std::map<std::pair<int, int>, std::vector<std::vector<K>>> reps_;
    std::map<std::pair<int, int>, std::vector<std::vector<K>>> image_;
};

struct betti_table {
    std::string model_name;
    std::string twist;
    std::string v_descriptor;
    std::string field;
    int p_max = 0;
    int q_max = 0;
    std::vector<std::vector<long>> k;  // k[q][p]

    long at(int p, int q) const {
        if (p < 0 || p > p_max || q < 0 || q > q_max) return 0;
        return k[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
    }
};

template <class K>
betti_table compute_betti_table(koszul_engine<K>& eng, int p_max, int q_max, const std::string& twist,
                                const std::string& v_descriptor) {
    betti_table T;
    T.model_name = eng.module().label;
    T.twist = twist;
    T.v_descriptor = v_descriptor;
    T.field = field_traits<K>::name();
    T.p_max = p_max;
    T.q_max = q_max;
    T.k.assign(static_cast<std::size_t>(q_max) + 1, std::vector<long>(static_cast<std::size_t>(p_max) + 1, 0));
    for (int q = 0; q <= q_max; ++q)
        for (int p = 0; p <= p_max; ++p)
            T.k[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = eng.cohomology_dim(p, q);
    return T;
}

// Convenience: build the module window the table needs and compute.
template <class K>
betti_table betti_of(const model_ptr& model, twist_tag B, int p_max, int q_max) {
    auto M = section_module<K>(model, B, -1, q_max + 1);
    koszul_engine<K> eng(M);
    std::string vdesc = model->meta.linearly_normal
                            ? "complete"
                            : "codimension " + std::to_string(model->meta.t) + " subspace";
    betti_table T = compute_betti_table(eng, p_max, q_max, B == twist_tag::zero ? "zero" : "canonical", vdesc);
    T.model_name = model->name;
    return T;
}

template <class K>
betti_table betti_of_coordinate_ring(const model_ptr& model, int p_max, int q_max) {
    auto M = coordinate_ring_module<K>(model, -1, q_max + 1);
    koszul_engine<K> eng(M);
    betti_table T = compute_betti_table(eng, p_max, q_max, "coordinate ring", "ambient linear forms");
    T.model_name = model->name;
    return T;
}

// Module regularity read off the table: the last nonzero row.  The table must
// reach exhaustion, i.e. contain at least one fully zero row above it.
inline int regularity_from_table(const betti_table& T) {
    int last = -1;
    for (int q = 0; q <= T.q_max; ++q)
        for (int p = 0; p <= T.p_max; ++p)
            if (T.at(p, q) != 0) last = std::max(last, q);
    if (last == T.q_max)
        throw inconclusive_error("betti table for " + T.model_name + " is truncated before exhaustion: row " +
                                 std::to_string(T.q_max) + " is still nonzero");
    return last;
}

struct nk_report {
    bool holds = true;
    int fail_p = -1, fail_q = -1;
};

// N_k: projectively normal (encoded as k_{0,q} = 0 for q >= 1) and only
// linear syzygies through homological step k.
inline nk_report nk_property(const betti_table& T, int k) {
    require(k <= T.p_max, "N_k query beyond the computed table");
    nk_report rep;
    for (int q = 1; q <= T.q_max; ++q)
        if (T.at(0, q) != 0) {
            rep.holds = false;
            rep.fail_p = 0;
            rep.fail_q = q;
            return rep;
        }
    for (int p = 1; p <= k; ++p)
        for (int q = 2; q <= T.q_max; ++q)
            if (T.at(p, q) != 0) {
                rep.holds = false;
                rep.fail_p = p;
                rep.fail_q = q;
                return rep;
            }
    return rep;
}

// Alternating-sum consistency for the total-degree-s strand of the complex:
// chains and cohomology have the same Euler characteristic.  Valid when every
// potentially nonzero cell on the strand is inside the table, which the
// certified regularity bound guarantees.
template <class K>
bool strand_euler_consistent(const betti_table& T, const graded_module<K>& M, int s, int certified_reg) {
    require(certified_reg <= T.q_max, "strand check needs the table to reach the certified regularity");
    require(s <= T.p_max && s <= M.q_hi, "strand check beyond the computed window");
    long chains = 0, cohom = 0;
    for (int p = 0; p <= std::min(M.vdim, s); ++p) {
        int q = s - p;
        long c = static_cast<long>(binomial(static_cast<std::size_t>(M.vdim), static_cast<std::size_t>(p))) *
                 M.dim(q);
        chains += (p % 2 == 0) ? c : -c;
        long h = (q <= T.q_max) ? T.at(p, q) : 0;
        cohom += (p % 2 == 0) ? h : -h;
    }
    return chains == cohom;
}

struct duality_cell {
    int p = 0;
    long lhs = 0;           // k_{p,2} of the zero twist
    long rhs_literal = 0;   // k_{e+1-p,0} of the canonical twist
    long rhs_shifted = 0;   // k_{e-p,0} of the canonical twist
    bool match_literal = false;
    bool match_shifted = false;
};

struct duality_report {
    std::string model_name;
    int e = 0;
    std::vector<duality_cell> cells;
    bool all_literal = true;
    bool all_shifted = true;
};

// Compares the weight-2 row of the zero twist against the weight-0 row of
// the canonical twist under the two candidate index shifts e+1-p and e-p.
// Pure report; callers decide which shift they are testing.
template <class K>
duality_report green_duality_check(const model_ptr& model, int p_max) {
    require(model->meta.n == 1, "duality check expects a curve model");
    auto M0 = section_module<K>(model, twist_tag::zero, -1, 3);
    auto MK = section_module<K>(model, twist_tag::canonical, -1, 1);
    koszul_engine<K> e0(M0), eK(MK);
    duality_report rep;
    rep.model_name = model->name;
    rep.e = model->meta.e;
    for (int p = 0; p <= p_max; ++p) {
        duality_cell c;
        c.p = p;
        c.lhs = e0.cohomology_dim(p, 2);
        c.rhs_literal = eK.cohomology_dim(rep.e + 1 - p, 0);
        c.rhs_shifted = eK.cohomology_dim(rep.e - p, 0);
        c.match_literal = c.lhs == c.rhs_literal;
        c.match_shifted = c.lhs == c.rhs_shifted;
        rep.all_literal = rep.all_literal && c.match_literal;
        rep.all_shifted = rep.all_shifted && c.match_shifted;
        rep.cells.push_back(c);
    }
    return rep;
}

// ---- rendering -------------------------------------------------------------

inline std::string render_pretty(const betti_table& T) {
    std::vector<std::size_t> width(static_cast<std::size_t>(T.p_max) + 1, 1);
    for (int p = 0; p <= T.p_max; ++p)
        for (int q = 0; q <= T.q_max; ++q)
            width[static_cast<std::size_t>(p)] =
                std::max(width[static_cast<std::size_t>(p)], std::to_string(T.at(p, q)).size());
    std::ostringstream out;
    out << T.model_name << "  [twist " << T.twist << ", V " << T.v_descriptor << ", field " << T.field
        << "]\n";
    out << "      ";
    for (int p = 0; p <= T.p_max; ++p) {
        std::string h = std::to_string(p);
        out << std::string(width[static_cast<std::size_t>(p)] + 2 - h.size(), ' ') << h;
    }
    out << "\n";
    for (int q = 0; q <= T.q_max; ++q) {
        std::string h = std::to_string(q);
        out << std::string(4 - h.size(), ' ') << h << ": ";
        for (int p = 0; p <= T.p_max; ++p) {
            std::string cell = T.at(p, q) == 0 ? "." : std::to_string(T.at(p, q));
            out << std::string(width[static_cast<std::size_t>(p)] + 2 - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json render_json(const betti_table& T) {
    nlohmann::ordered_json j;
    j["model"] = T.model_name;
    j["twist"] = T.twist;
    j["v"] = T.v_descriptor;
    j["field"] = T.field;
    j["p_max"] = T.p_max;
    j["q_max"] = T.q_max;
    j["rows"] = T.k;
    return j;
}

inline std::string render_csv(const betti_table& T) {
    std::ostringstream out;
    out << "q\\p";
    for (int p = 0; p <= T.p_max; ++p) out << "," << p;
    out << "\n";
    for (int q = 0; q <= T.q_max; ++q) {
        out << q;
        for (int p = 0; p <= T.p_max; ++p) out << "," << T.at(p, q);
        out << "\n";
    }
    return out.str();
}

}  // namespace syzygy
