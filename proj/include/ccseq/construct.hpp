#pragma once
// Builders for the two truncated-domain GBF templates and everything derived
// from them: Golay pairs, mutually orthogonal complementary sets, reversed
// mates, complete complementary codes, and the column-PMEPR offset.
//
// Family TEN      : length 10*2^(m-4) = 2^(m-1)+2^(m-3),          m >= 5
// Family THIRTEEN : length 13*2^(m-4) = 2^(m-1)+2^(m-2)+2^(m-4),  m >= 6
//
// The "low" variables z_0..z_{low-1} carry the quadratic form whose graph,
// after deleting the victim vertices, must be a path with edge labels q/2;
// the top four (TEN) or five (THIRTEEN) variables carry fixed glue terms.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corr.hpp"
#include "gbf.hpp"
#include "quadgraph.hpp"

namespace ccseq {

enum class Family { ten, thirteen };

struct ConstructionSpec {
    Family family = Family::ten;
    int m = 5;
    int q = 2;
    std::vector<QuadTerm> quadratic;  // over the low variables
    std::vector<int> linear;          // c_i per low variable; empty means all zero
    int constant = 0;                 // c
    std::vector<int> victims;         // deleted vertices p_0 < ... < p_{k-1}
    std::vector<int> victim_bits;     // restriction word; empty means all zero
    std::optional<int> beta1;         // endpoint override; default: smaller endpoint
    int gcp_offset = 0;               // c' added to the second pair member
};

inline int low_variable_count(Family family, int m) {
    return family == Family::ten ? m - 4 : m - 5;
}

inline std::size_t sequence_length(Family family, int m) {
    const std::size_t u = std::size_t{1} << (m - 4);
    return family == Family::ten ? 10 * u : 13 * u;
}

// Suffix window start: the complement point set {2^m-1-x : x in A}.
inline std::size_t mate_domain_start(Family family, int m) {
    return (std::size_t{1} << m) - sequence_length(family, m);
}

struct Endpoints {
    int beta1 = 0;
    int beta2 = 0;
    std::vector<int> order;  // surviving path order
};

inline void validate(const ConstructionSpec& spec) {
    const char* fam = spec.family == Family::ten ? "ten" : "thirteen";
    const int min_m = spec.family == Family::ten ? 5 : 6;
    if (spec.m < min_m)
        throw std::invalid_argument(std::string("construct: m must be >= ") +
                                    std::to_string(min_m) + " for the " + fam + " family");
    if (spec.m > 24) throw std::invalid_argument("construct: m too large (limit 24)");
    if (spec.q < 2 || spec.q % 2 != 0)
        throw std::invalid_argument("construct: q must be even and >= 2");
    const int low = low_variable_count(spec.family, spec.m);
    if (!spec.linear.empty() && static_cast<int>(spec.linear.size()) != low)
        throw std::invalid_argument("construct: linear coefficient count must match low variables");
    const int k_max = low - 1;  // at least one surviving vertex
    if (static_cast<int>(spec.victims.size()) > k_max)
        throw std::invalid_argument("construct: too many deleted vertices for this family/m");
    for (std::size_t i = 0; i < spec.victims.size(); ++i) {
        if (spec.victims[i] < 0 || spec.victims[i] >= low)
            throw std::invalid_argument("construct: deleted vertex out of range");
        if (i > 0 && spec.victims[i] <= spec.victims[i - 1])
            throw std::invalid_argument("construct: deleted vertices must be strictly increasing");
    }
    if (!spec.victim_bits.empty() && spec.victim_bits.size() != spec.victims.size())
        throw std::invalid_argument("construct: victim bit word length must match victim count");
    for (int b : spec.victim_bits)
        if (b != 0 && b != 1) throw std::invalid_argument("construct: victim bits must be 0/1");
}

// Path condition after deleting the victims; resolves the beta1/beta2 choice.
inline Endpoints resolve_endpoints(const ConstructionSpec& spec) {
    validate(spec);
    const int low = low_variable_count(spec.family, spec.m);
    const QuadGraph g = graph_of(spec.quadratic, low, spec.q);
    const PathCheck pc = is_labeled_path(delete_vertices(g, spec.victims));
    if (!pc.ok)
        throw std::invalid_argument("construct: deleting the victims does not leave a labeled path (" +
                                    pc.reason + ")");
    Endpoints e;
    e.order = pc.witness.order;
    const int a = pc.witness.end_a();
    const int b = pc.witness.end_b();
    if (spec.beta1) {
        if (*spec.beta1 != a && *spec.beta1 != b)
            throw std::invalid_argument("construct: beta1 override is not a path endpoint");
        e.beta1 = *spec.beta1;
        e.beta2 = (*spec.beta1 == a) ? b : a;
    } else {
        e.beta1 = std::min(a, b);
        e.beta2 = std::max(a, b);
    }
    return e;
}

namespace detail {

inline Gbf base_f1(const ConstructionSpec& spec, std::size_t length) {
    Gbf f(spec.m, spec.q, Domain::prefix(spec.m, length));
    const int low = low_variable_count(spec.family, spec.m);
    for (const QuadTerm& t : spec.quadratic) {
        if (!(0 <= t.i && t.i < t.j && t.j < low))
            throw std::invalid_argument("construct: quadratic term outside the low variables");
        f.add_quadratic(t.i, t.j, t.coeff);
    }
    for (std::size_t i = 0; i < spec.linear.size(); ++i)
        f.add_linear(static_cast<int>(i), spec.linear[i]);
    f.add_constant(spec.constant);
    return f;
}

inline Literal z(int v) { return Literal{v, false}; }
inline Literal zb(int v) { return Literal{v, true}; }

}  // namespace detail

// TEN-family template. On top of f1, with h = q/2 and b1 the chosen endpoint:
//   h * zb_{m-1} ( zb_{m-4} (z_{m-3} + z_{m-2}) + z_{m-2} z_{m-3} )
// + h * z_{b1}   ( zb_{m-1} (z_{m-2} zb_{m-3} zb_{m-4} + z_{m-2} z_{m-3})
//                + z_{m-1} zb_{m-2} zb_{m-3} )
inline Gbf build_f_10(const ConstructionSpec& spec) {
    if (spec.family != Family::ten) throw std::invalid_argument("build_f_10: spec is not the ten family");
    const Endpoints ep = resolve_endpoints(spec);
    Gbf f = detail::base_f1(spec, sequence_length(spec.family, spec.m));
    using detail::z;
    using detail::zb;
    const int h = spec.q / 2;
    const int m1 = spec.m - 1, m2 = spec.m - 2, m3 = spec.m - 3, m4 = spec.m - 4;
    const int b1 = ep.beta1;
    f.add_term(h, {zb(m1), zb(m4), z(m3)});
    f.add_term(h, {zb(m1), zb(m4), z(m2)});
    f.add_term(h, {zb(m1), z(m2), z(m3)});
    f.add_term(h, {z(b1), zb(m1), z(m2), zb(m3), zb(m4)});
    f.add_term(h, {z(b1), zb(m1), z(m2), z(m3)});
    f.add_term(h, {z(b1), z(m1), zb(m2), zb(m3)});
    return f;
}

// THIRTEEN-family template. On top of f1, with h = q/2:
//   h * z_{b1} ( zb_{m-1} zb_{m-2}
//              + zb_{m-1} z_{m-2} (zb_{m-3} + z_{m-3} zb_{m-4} z_{m-5}) )
// + h * ( zb_{m-1} zb_{m-2} (zb_{m-3} z_{m-4} z_{m-5} + z_{m-3} zb_{m-4} zb_{m-5})
//       + zb_{m-1} z_{m-2}  (zb_{m-3} zb_{m-5} + z_{m-3} zb_{m-4}
//                            + z_{m-4} (zb_{m-3} z_{m-5} + z_{m-3} zb_{m-5}))
//       + z_{m-1} zb_{m-2}  (zb_{m-4} zb_{m-5} + z_{m-3} z_{m-4} + zb_{m-3} z_{m-4} z_{m-5})
//       + z_{m-1} z_{m-2} zb_{m-3} zb_{m-4} )
// The tail product z_{m-1} z_{m-2} zb_{m-3} zb_{m-4} is a standalone term: on
// this domain the points with z_{m-1} = z_{m-2} = 1 all have
// z_{m-3} = z_{m-4} = 0, so it flips exactly the last 2^(m-4) entries.
inline Gbf build_f_13(const ConstructionSpec& spec) {
    if (spec.family != Family::thirteen)
        throw std::invalid_argument("build_f_13: spec is not the thirteen family");
    const Endpoints ep = resolve_endpoints(spec);
    Gbf f = detail::base_f1(spec, sequence_length(spec.family, spec.m));
    using detail::z;
    using detail::zb;
    const int h = spec.q / 2;
    const int m1 = spec.m - 1, m2 = spec.m - 2, m3 = spec.m - 3, m4 = spec.m - 4,
              m5 = spec.m - 5;
    const int b1 = ep.beta1;
    f.add_term(h, {z(b1), zb(m1), zb(m2)});
    f.add_term(h, {z(b1), zb(m1), z(m2), zb(m3)});
    f.add_term(h, {z(b1), zb(m1), z(m2), z(m3), zb(m4), z(m5)});
    f.add_term(h, {zb(m1), zb(m2), zb(m3), z(m4), z(m5)});
    f.add_term(h, {zb(m1), zb(m2), z(m3), zb(m4), zb(m5)});
    f.add_term(h, {zb(m1), z(m2), zb(m3), zb(m5)});
    f.add_term(h, {zb(m1), z(m2), z(m3), zb(m4)});
    f.add_term(h, {zb(m1), z(m2), z(m4), zb(m3), z(m5)});
    f.add_term(h, {zb(m1), z(m2), z(m4), z(m3), zb(m5)});
    f.add_term(h, {z(m1), zb(m2), zb(m4), zb(m5)});
    f.add_term(h, {z(m1), zb(m2), z(m3), z(m4)});
    f.add_term(h, {z(m1), zb(m2), zb(m3), z(m4), z(m5)});
    f.add_term(h, {z(m1), z(m2), zb(m3), zb(m4)});
    return f;
}

inline Gbf build_f(const ConstructionSpec& spec) {
    return spec.family == Family::ten ? build_f_10(spec) : build_f_13(spec);
}

inline std::vector<int> effective_bits(const ConstructionSpec& spec) {
    if (!spec.victim_bits.empty()) return spec.victim_bits;
    return std::vector<int>(spec.victims.size(), 0);
}

// The pair (f|_{z=c}, (f + h*z_{beta2} + c')|_{z=c}); with no victims the
// restriction is null and both rows are full-length sequences.
inline std::pair<RestrictedVector, RestrictedVector>
gcp_pair(const Gbf& f, const std::vector<int>& victims, const std::vector<int>& bits, int beta2,
         int c_offset) {
    const RestrictedVector first = f.restricted(victims, bits);
    Gbf g = f;
    g.add_linear(beta2, f.q() / 2);
    g.add_constant(c_offset);
    return {first, g.restricted(victims, bits)};
}

inline std::pair<RestrictedVector, RestrictedVector> gcp_pair(const ConstructionSpec& spec) {
    const Endpoints ep = resolve_endpoints(spec);
    return gcp_pair(build_f(spec), spec.victims, effective_bits(spec), ep.beta2, spec.gcp_offset);
}

// Flock member n of S_t encodes (a, a_0..a_{k-1}) with a the fastest
// (least-significant) bit: n = a + sum_alpha a_alpha 2^(alpha+1). Binary
// words act through weight q/2 so the terms stay Z_q-valued.
inline CodeSet mocs_set(const Gbf& f, const std::vector<int>& victims, int beta2, int t) {
    const int k = static_cast<int>(victims.size());
    if (t < 0 || t >= (1 << k)) throw std::invalid_argument("mocs_set: t out of range");
    const int h = f.q() / 2;
    CodeSet set;
    for (int n = 0; n < (1 << (k + 1)); ++n) {
        const int a = n & 1;
        Gbf g = f;
        for (int al = 0; al < k; ++al) {
            const int a_al = (n >> (al + 1)) & 1;
            const int n_al = (t >> al) & 1;
            g.add_linear(victims[static_cast<std::size_t>(al)], h * ((a_al + n_al) % 2));
        }
        g.add_linear(beta2, h * a);
        set.members.push_back(as_restricted(g.sequence()));
    }
    return set;
}

inline CodeSet mocs_set(const ConstructionSpec& spec, int t) {
    const Endpoints ep = resolve_endpoints(spec);
    return mocs_set(build_f(spec), spec.victims, ep.beta2, t);
}

// fbar(z) = f(zbar) over the complement window B = {2^m-1-x : x in A}; its
// sequence over B is the reverse of f's sequence over A.
inline Gbf reversed_gbf(const Gbf& f) {
    const Domain& d = f.domain();
    if (d.kind == DomainKind::suffix)
        return f.complemented().with_domain(Domain::prefix(f.m(), d.length));
    return f.complemented().with_domain(Domain::suffix(f.m(), d.length));
}

// Mate flock: complemented victim literals, and the beta2 row toggled by
// abar = 1 - a (the z_{beta2} literal itself stays plain).
inline CodeSet mate_set(const Gbf& fbar, const std::vector<int>& victims, int beta2, int t) {
    const int k = static_cast<int>(victims.size());
    if (t < 0 || t >= (1 << k)) throw std::invalid_argument("mate_set: t out of range");
    const int h = fbar.q() / 2;
    CodeSet set;
    for (int n = 0; n < (1 << (k + 1)); ++n) {
        const int a = n & 1;
        Gbf g = fbar;
        for (int al = 0; al < k; ++al) {
            const int a_al = (n >> (al + 1)) & 1;
            const int n_al = (t >> al) & 1;
            g.add_term(h * ((a_al + n_al) % 2),
                       {Literal{victims[static_cast<std::size_t>(al)], true}});
        }
        g.add_linear(beta2, h * (1 - a));
        set.members.push_back(as_restricted(g.sequence()));
    }
    return set;
}

inline CodeSet mate_set(const ConstructionSpec& spec, int t) {
    const Endpoints ep = resolve_endpoints(spec);
    return mate_set(reversed_gbf(build_f(spec)), spec.victims, ep.beta2, t);
}

// The ordered family {S_0..S_{2^k-1}, Sbar_0..Sbar_{2^k-1}}; K = M = 2^(k+1).
inline CodeFamily ccc(const ConstructionSpec& spec) {
    const Endpoints ep = resolve_endpoints(spec);
    const Gbf f = build_f(spec);
    const Gbf fbar = reversed_gbf(f);
    const int k = static_cast<int>(spec.victims.size());
    CodeFamily fam;
    for (int t = 0; t < (1 << k); ++t) fam.sets.push_back(mocs_set(f, spec.victims, ep.beta2, t));
    for (int t = 0; t < (1 << k); ++t) fam.sets.push_back(mate_set(fbar, spec.victims, ep.beta2, t));
    return fam;
}

// Per-member constant for the column-PMEPR offset. With perm = pi' over
// {0..k-1} the member labeled (a, a_0..a_{k-1}) gains
//   h * ( sum_{al=0}^{k-2} a_{pi'(al)} a_{pi'(al+1)}  +  a_{pi'(k-1)} * a ).
// The trailing product couples the flock bit a into the chain, so each
// column exponent is a path quadratic over (a_{pi'(0)},..,a_{pi'(k-1)},a)
// and the column is a Golay sequence (bound 2). k = 0 is the identity.
inline std::vector<int> member_offsets(int k, int q, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != k)
        throw std::invalid_argument("member_offsets: permutation size must equal k");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int p : perm) {
        if (p < 0 || p >= k || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("member_offsets: not a permutation of 0..k-1");
        seen[static_cast<std::size_t>(p)] = true;
    }
    const int h = q / 2;
    std::vector<int> out;
    for (int n = 0; n < (1 << (k + 1)); ++n) {
        const int a = n & 1;
        auto bit = [&](int al) { return (n >> (al + 1)) & 1; };
        int sum = 0;
        for (int al = 0; al + 1 < k; ++al) sum += bit(perm[static_cast<std::size_t>(al)]) * bit(perm[static_cast<std::size_t>(al + 1)]);
        if (k >= 1) sum += bit(perm[static_cast<std::size_t>(k - 1)]) * a;
        out.push_back((h * sum) % q);
    }
    return out;
}

inline CodeSet pmepr_offset(const CodeSet& set, const ConstructionSpec& spec,
                            const std::vector<int>& perm) {
    const int k = static_cast<int>(spec.victims.size());
    if (set.flock() != (std::size_t{1} << (k + 1)))
        throw std::invalid_argument("pmepr_offset: flock size does not match 2^(k+1)");
    const std::vector<int> offs = member_offsets(k, spec.q, perm);
    CodeSet out = set;
    for (std::size_t n = 0; n < out.members.size(); ++n) {
        for (int& e : out.members[n].exps)
            if (e != RestrictedVector::kZero) e = (e + offs[n]) % spec.q;
    }
    return out;
}

}  // namespace ccseq
