#pragma once
// Aperiodic correlation machinery and the GCP/CS/MOCS/CCC verifiers.
// Two independent evaluation routes: a naive O(N^2) sum (exact integers when
// q = 2) and an FFT route over zero-padded spectra; the two must agree and a
// test enforces it.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbf.hpp"

namespace ccseq {

using cvec = std::vector<std::complex<double>>;

// Aperiodic cross-correlation at integer shift s:
//   sum_k d_k * conj(e_{k+s})   for 0 <= s < N,
//   sum_k d_{k+|s|} * conj(e_k) for -N < s < 0,
//   0                           for |s| >= N.
inline std::complex<double> accf(const cvec& d, const cvec& e, long s) {
    if (d.size() != e.size()) throw std::invalid_argument("accf: length mismatch");
    const long n = static_cast<long>(d.size());
    if (s >= n || s <= -n) return {0.0, 0.0};
    std::complex<double> sum{0.0, 0.0};
    if (s >= 0) {
        for (long k = 0; k < n - s; ++k)
            sum += d[static_cast<std::size_t>(k)] * std::conj(e[static_cast<std::size_t>(k + s)]);
    } else {
        for (long k = 0; k < n + s; ++k)
            sum += d[static_cast<std::size_t>(k - s)] * std::conj(e[static_cast<std::size_t>(k)]);
    }
    return sum;
}

inline std::complex<double> aacf(const cvec& e, long s) { return accf(e, e, s); }

namespace detail {

// Iterative radix-2 FFT, in place; n must be a power of two.
inline void fft_pow2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> step{std::cos(angle), std::sin(angle)};
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= step;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

// q = 2 integer image: exponent 0 -> +1, 1 -> -1, structural zero -> 0.
inline bool binary_image(const RestrictedVector& v, std::vector<int>& out) {
    if (v.q != 2) return false;
    out.clear();
    out.reserve(v.exps.size());
    for (int e : v.exps) {
        if (e == RestrictedVector::kZero) out.push_back(0);
        else if (e == 0) out.push_back(1);
        else if (e == 1) out.push_back(-1);
        else return false;
    }
    return true;
}

inline long long accf_int(const std::vector<int>& d, const std::vector<int>& e, long s) {
    const long n = static_cast<long>(d.size());
    if (s >= n || s <= -n) return 0;
    long long sum = 0;
    if (s >= 0) {
        for (long k = 0; k < n - s; ++k)
            sum += static_cast<long long>(d[static_cast<std::size_t>(k)]) * e[static_cast<std::size_t>(k + s)];
    } else {
        for (long k = 0; k < n + s; ++k)
            sum += static_cast<long long>(d[static_cast<std::size_t>(k - s)]) * e[static_cast<std::size_t>(k)];
    }
    return sum;
}

}  // namespace detail

// All shifts at once via zero-padded spectral multiplication;
// result[s + N - 1] = accf(d, e, s) for s in (-N, N).
inline cvec full_accf(const cvec& d, const cvec& e) {
    if (d.size() != e.size()) throw std::invalid_argument("full_accf: length mismatch");
    const std::size_t n = d.size();
    if (n == 0) return {};
    std::size_t p = 1;
    while (p < 2 * n) p <<= 1;
    cvec fd(p, {0.0, 0.0}), fe(p, {0.0, 0.0});
    std::copy(d.begin(), d.end(), fd.begin());
    std::copy(e.begin(), e.end(), fe.begin());
    detail::fft_pow2(fd, false);
    detail::fft_pow2(fe, false);
    for (std::size_t i = 0; i < p; ++i) fd[i] *= std::conj(fe[i]);
    detail::fft_pow2(fd, true);
    // circular index (P - s) mod P holds lag +s
    cvec out(2 * n - 1);
    for (long s = -(static_cast<long>(n) - 1); s <= static_cast<long>(n) - 1; ++s) {
        const std::size_t idx = static_cast<std::size_t>((static_cast<long>(p) - s) % static_cast<long>(p));
        out[static_cast<std::size_t>(s + static_cast<long>(n) - 1)] = fd[idx];
    }
    return out;
}

// Ordered flock of equal-length rows (a complementary-set candidate).
struct CodeSet {
    std::vector<RestrictedVector> members;

    std::size_t flock() const { return members.size(); }
    std::size_t length() const { return members.empty() ? 0 : members.front().exps.size(); }
    int q() const { return members.empty() ? 2 : members.front().q; }
};

// Ordered list of CodeSets sharing flock size and length.
struct CodeFamily {
    std::vector<CodeSet> sets;

    std::size_t size() const { return sets.size(); }
};

inline void check_set(const CodeSet& s, const char* who) {
    if (s.members.empty()) throw std::invalid_argument(std::string(who) + ": empty set");
    for (const RestrictedVector& m : s.members) {
        if (m.exps.size() != s.length()) throw std::invalid_argument(std::string(who) + ": ragged set");
        if (m.q != s.q()) throw std::invalid_argument(std::string(who) + ": mixed q");
        for (int e : m.exps)
            if (e != RestrictedVector::kZero && (e < 0 || e >= m.q))
                throw std::invalid_argument(std::string(who) + ": exponent out of range");
    }
}

// Definition-level sums. Flock order matters: row n pairs with row n.
inline std::complex<double> accs(const CodeSet& a, const CodeSet& b, long s) {
    check_set(a, "accs");
    check_set(b, "accs");
    if (a.flock() != b.flock() || a.length() != b.length())
        throw std::invalid_argument("accs: flock/length mismatch");
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t n = 0; n < a.flock(); ++n)
        sum += accf(to_complex(a.members[n]), to_complex(b.members[n]), s);
    return sum;
}

inline std::complex<double> aacs(const CodeSet& a, long s) { return accs(a, a, s); }

struct CorrelationReport {
    std::string kind;       // gcp | cs | mocs | ccc
    bool pass = false;
    bool exact = false;     // integer arithmetic (q = 2)
    bool experimental = false;  // q > 2 family claim, outside the exactness promise
    double tolerance = 0.0;     // 0 when exact
    double worst_abs = 0.0;     // worst off-peak magnitude seen
    long worst_shift = 0;
    int worst_set_a = -1;   // offending set pair for family checks
    int worst_set_b = -1;
    double peak = 0.0;      // AACS at s = 0 (sum of member energies)
    std::size_t sets = 0;   // K
    std::size_t flock = 0;  // M
    std::size_t length = 0; // N
    std::string note;
};

namespace detail {

// Core family check. Covers the single-set case as a 1-element family.
// Conjugate symmetry accs(E^p,E^p')(-s) = conj(accs(E^p',E^p)(s)) means
// scanning every ordered pair at s >= 0 covers the negative shifts too.
inline CorrelationReport verify_family(const CodeFamily& fam, const char* kind, double tol_scale) {
    if (fam.sets.empty()) throw std::invalid_argument("verify: empty family");
    for (const CodeSet& s : fam.sets) check_set(s, "verify");
    const std::size_t flock = fam.sets.front().flock();
    const std::size_t length = fam.sets.front().length();
    const int q = fam.sets.front().q();
    for (const CodeSet& s : fam.sets)
        if (s.flock() != flock || s.length() != length || s.q() != q)
            throw std::invalid_argument("verify: family sets disagree on (M, N, q)");

    CorrelationReport r;
    r.kind = kind;
    r.sets = fam.sets.size();
    r.flock = flock;
    r.length = length;
    r.exact = (q == 2);
    r.experimental = (q != 2) && fam.sets.size() > 1;
    r.tolerance = r.exact ? 0.0
                          : tol_scale * static_cast<double>(flock) * static_cast<double>(length);

    const long n = static_cast<long>(length);
    double worst = -1.0;
    // Among equal-magnitude offenders prefer a non-zero shift as the witness;
    // it is the more actionable diagnostic.
    auto offend = [&](double mag, long s, int pa, int pb) {
        if (mag > worst || (mag == worst && r.worst_shift == 0 && s != 0)) {
            worst = mag;
            r.worst_abs = mag;
            r.worst_shift = s;
            r.worst_set_a = pa;
            r.worst_set_b = pb;
        }
    };

    if (r.exact) {
        std::vector<std::vector<std::vector<int>>> img(fam.sets.size());
        for (std::size_t p = 0; p < fam.sets.size(); ++p) {
            img[p].resize(flock);
            for (std::size_t i = 0; i < flock; ++i)
                if (!detail::binary_image(fam.sets[p].members[i], img[p][i]))
                    throw std::invalid_argument("verify: q=2 exponent outside {0,1}");
        }
        long long peak = 0;
        for (const auto& row : img[0])
            for (int x : row) peak += x * x;
        r.peak = static_cast<double>(peak);
        for (std::size_t pa = 0; pa < img.size(); ++pa) {
            for (std::size_t pb = 0; pb < img.size(); ++pb) {
                for (long s = 0; s < n; ++s) {
                    if (pa == pb && s == 0) continue;
                    long long v = 0;
                    for (std::size_t i = 0; i < flock; ++i)
                        v += detail::accf_int(img[pa][i], img[pb][i], s);
                    if (v != 0) offend(static_cast<double>(v < 0 ? -v : v), s,
                                       static_cast<int>(pa), static_cast<int>(pb));
                }
            }
        }
        r.pass = (worst < 0);
        if (worst < 0) { r.worst_abs = 0.0; r.worst_shift = 0; }
        return r;
    }

    // complex route: accumulate full correlation vectors per ordered set pair
    std::vector<std::vector<cvec>> img(fam.sets.size());
    for (std::size_t p = 0; p < fam.sets.size(); ++p)
        for (const RestrictedVector& m : fam.sets[p].members) img[p].push_back(to_complex(m));
    double peak = 0.0;
    for (const cvec& row : img[0])
        for (const std::complex<double>& x : row) peak += std::norm(x);
    r.peak = peak;
    for (std::size_t pa = 0; pa < img.size(); ++pa) {
        for (std::size_t pb = 0; pb < img.size(); ++pb) {
            cvec sum(2 * length - 1, {0.0, 0.0});
            for (std::size_t i = 0; i < flock; ++i) {
                const cvec c = full_accf(img[pa][i], img[pb][i]);
                for (std::size_t k = 0; k < c.size(); ++k) sum[k] += c[k];
            }
            for (long s = 0; s < n; ++s) {
                if (pa == pb && s == 0) continue;
                const double mag = std::abs(sum[static_cast<std::size_t>(s + n - 1)]);
                if (mag > r.tolerance)
                    offend(mag, s, static_cast<int>(pa), static_cast<int>(pb));
            }
        }
    }
    r.pass = (worst < 0);
    if (worst < 0) { r.worst_abs = 0.0; r.worst_shift = 0; }
    return r;
}

}  // namespace detail

inline CorrelationReport verify_cs(const CodeSet& set, double tol_scale = 1e-9) {
    check_set(set, "verify_cs");
    if (set.flock() < 2) throw std::invalid_argument("verify_cs: a CS needs at least 2 rows");
    CodeFamily f;
    f.sets = {set};
    auto r = detail::verify_family(f, "cs", tol_scale);
    r.experimental = false;
    return r;
}

inline CorrelationReport verify_gcp(const CodeSet& pair, double tol_scale = 1e-9) {
    check_set(pair, "verify_gcp");
    if (pair.flock() != 2) throw std::invalid_argument("verify_gcp: a pair has exactly 2 rows");
    CodeFamily f;
    f.sets = {pair};
    auto r = detail::verify_family(f, "gcp", tol_scale);
    r.experimental = false;
    return r;
}

inline CorrelationReport verify_mocs(const CodeFamily& fam, double tol_scale = 1e-9) {
    auto r = detail::verify_family(fam, "mocs", tol_scale);
    if (fam.sets.size() > fam.sets.front().flock()) {
        r.pass = false;
        r.note = "set size K exceeds flock size M";
    }
    return r;
}

inline CorrelationReport verify_ccc(const CodeFamily& fam, double tol_scale = 1e-9) {
    auto r = verify_mocs(fam, tol_scale);
    r.kind = "ccc";
    if (fam.sets.size() != fam.sets.front().flock()) {
        r.pass = false;
        r.note = "K != M: family is not complete";
    }
    return r;
}

}  // namespace ccseq
