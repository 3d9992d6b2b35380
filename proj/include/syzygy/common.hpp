#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace syzygy {

// Raised for malformed input text or invalid user-supplied parameters.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal consistency check fails; indicates a bug,
// never bad user input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// Raised when a computation cannot certify its answer (for example a
// truncated table window); callers must not treat this as a pass.
struct inconclusive_error : std::runtime_error {
    explicit inconclusive_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

// Deterministic 64-bit generator (splitmix64).  Every randomized choice in
// the library draws from one of these so that a recorded seed reproduces a
// run bit for bit on any platform.
class seeded_rng {
public:
    explicit seeded_rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi], endpoints included.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        check(lo <= hi, "seeded_rng::range: empty interval");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Independent child stream, detached from this one's future output.
    seeded_rng split() { return seeded_rng(next() ^ 0x5851f42d4c957f2dULL); }

private:
    std::uint64_t state_;
};

inline mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Binomial coefficient as a machine word; the callers only ever need
// desk-scale values, so overflow is a hard error rather than a silent wrap.
inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class r = binomial_mpz(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    check(r.fits_ulong_p(), "binomial: value exceeds machine word");
    return static_cast<std::size_t>(r.get_ui());
}

// All strictly increasing k-element index tuples drawn from {0,...,n-1},
// in lexicographic order.  This fixed enumeration is the ordered basis of
// the exterior power used by every Koszul matrix.
inline std::vector<std::vector<int>> index_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// Position of a strictly increasing tuple in the index_subsets enumeration.
inline std::size_t subset_rank(const std::vector<int>& s, int n) {
    std::size_t rank = 0;
    int k = static_cast<int>(s.size());
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int j = prev + 1; j < s[i]; ++j)
            rank += binomial(static_cast<std::size_t>(n - 1 - j), static_cast<std::size_t>(k - 1 - i));
        prev = s[i];
    }
    return rank;
}

}  // namespace syzygy
