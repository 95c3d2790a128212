#pragma once
// Generalized Boolean functions f : {0,1}^m -> Z_q, stored as sums of
// coefficient-weighted products of variables z_i and complements 1-z_i.
// Sequences are read over contiguous windows of the point space in
// increasing point order; variable z_j is bit j of the point (LSB first).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccseq {

// A variable or its complement inside a product term.
struct Literal {
    int var = 0;
    bool complemented = false;
};

// coeff * product of literals; an empty product is a constant term.
struct Term {
    int coeff = 0;
    std::vector<Literal> literals;
};

enum class DomainKind { full, prefix, suffix };

// Evaluation window: a contiguous run of points of {0,1}^m, listed in
// increasing point order. Only full/prefix/suffix windows are allowed so the
// position <-> point mapping stays unambiguous.
struct Domain {
    int m = 0;
    DomainKind kind = DomainKind::full;
    std::size_t length = 0;

    static Domain full(int m) { return make(m, DomainKind::full, std::size_t{1} << check_m(m)); }
    static Domain prefix(int m, std::size_t length) { return make(m, DomainKind::prefix, length); }
    static Domain suffix(int m, std::size_t length) { return make(m, DomainKind::suffix, length); }

    std::uint32_t start() const {
        if (kind == DomainKind::suffix)
            return static_cast<std::uint32_t>((std::size_t{1} << m) - length);
        return 0;
    }
    std::uint32_t point(std::size_t pos) const { return start() + static_cast<std::uint32_t>(pos); }

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    static int check_m(int m) {
        if (m < 1 || m > 30) throw std::invalid_argument("domain: m must be in [1,30]");
        return m;
    }
    static Domain make(int m, DomainKind kind, std::size_t length) {
        check_m(m);
        if (length == 0 || length > (std::size_t{1} << m))
            throw std::invalid_argument("domain: length must be in [1, 2^m]");
        if (kind == DomainKind::full && length != (std::size_t{1} << m))
            throw std::invalid_argument("domain: full window must have length 2^m");
        return Domain{m, kind, length};
    }
};

// Z_q exponent row of a full-support sequence.
struct ZqSequence {
    int q = 2;
    std::vector<int> exps;
};

// Z_q exponent row that may carry structural zeros (restriction mismatches);
// a kZero entry means the complex sample is 0 rather than a root of unity.
struct RestrictedVector {
    static constexpr int kZero = -1;

    int q = 2;
    std::vector<int> exps;

    std::size_t support() const {
        std::size_t n = 0;
        for (int e : exps) n += (e != kZero);
        return n;
    }
};

inline RestrictedVector as_restricted(const ZqSequence& s) { return RestrictedVector{s.q, s.exps}; }

inline std::complex<double> unit_root(int q, int exp) {
    const double angle = 2.0 * std::numbers::pi * exp / q;
    return {std::cos(angle), std::sin(angle)};
}

inline std::vector<std::complex<double>> to_complex(const ZqSequence& s) {
    std::vector<std::complex<double>> out;
    out.reserve(s.exps.size());
    for (int e : s.exps) out.push_back(unit_root(s.q, e));
    return out;
}

inline std::vector<std::complex<double>> to_complex(const RestrictedVector& v) {
    std::vector<std::complex<double>> out;
    out.reserve(v.exps.size());
    for (int e : v.exps)
        out.push_back(e == RestrictedVector::kZero ? std::complex<double>{0.0, 0.0}
                                                   : unit_root(v.q, e));
    return out;
}

class Gbf {
public:
    Gbf(int m, int q, Domain domain) : m_(m), q_(q), domain_(domain) {
        if (m < 1 || m > 30) throw std::invalid_argument("gbf: m must be in [1,30]");
        if (q < 2 || q % 2 != 0) throw std::invalid_argument("gbf: q must be even and >= 2");
        if (domain.m != m) throw std::invalid_argument("gbf: domain is over a different m");
    }

    int m() const { return m_; }
    int q() const { return q_; }
    const Domain& domain() const { return domain_; }
    const std::vector<Term>& terms() const { return terms_; }

    void add_term(int coeff, std::vector<Literal> literals) {
        for (const Literal& l : literals)
            if (l.var < 0 || l.var >= m_)
                throw std::invalid_argument("gbf: literal variable out of range");
        coeff = mod_q(coeff);
        if (coeff == 0) return;  // vanishes identically
        terms_.push_back(Term{coeff, std::move(literals)});
    }

    void add_quadratic(int i, int j, int coeff) {
        if (i == j) throw std::invalid_argument("gbf: quadratic term needs distinct variables");
        add_term(coeff, {Literal{i, false}, Literal{j, false}});
    }

    void add_linear(int i, int coeff) { add_term(coeff, {Literal{i, false}}); }
    void add_constant(int coeff) { add_term(coeff, {}); }

    int evaluate(std::uint32_t point) const {
        long long sum = 0;
        for (const Term& t : terms_) {
            bool alive = true;
            for (const Literal& l : t.literals) {
                const int bit = (point >> l.var) & 1u;
                if ((l.complemented ? 1 - bit : bit) == 0) { alive = false; break; }
            }
            if (alive) sum += t.coeff;
        }
        return static_cast<int>(sum % q_);
    }

    ZqSequence sequence() const {
        ZqSequence s{q_, {}};
        s.exps.reserve(domain_.length);
        for (std::size_t pos = 0; pos < domain_.length; ++pos)
            s.exps.push_back(evaluate(domain_.point(pos)));
        return s;
    }

    // f|_{vars=bits}: omega^f where the fixed variables match, structural zero
    // elsewhere. Empty vars is the null restriction (full support).
    RestrictedVector restricted(const std::vector<int>& vars, const std::vector<int>& bits) const {
        if (vars.size() != bits.size())
            throw std::invalid_argument("gbf: restriction vars/bits size mismatch");
        std::uint32_t mask = 0, want = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] < 0 || vars[i] >= m_)
                throw std::invalid_argument("gbf: restriction variable out of range");
            if (i > 0 && vars[i] <= vars[i - 1])
                throw std::invalid_argument("gbf: restriction variables must be strictly increasing");
            if (bits[i] != 0 && bits[i] != 1)
                throw std::invalid_argument("gbf: restriction bits must be 0/1");
            mask |= 1u << vars[i];
            if (bits[i]) want |= 1u << vars[i];
        }
        RestrictedVector v{q_, {}};
        v.exps.reserve(domain_.length);
        for (std::size_t pos = 0; pos < domain_.length; ++pos) {
            const std::uint32_t p = domain_.point(pos);
            v.exps.push_back((p & mask) == want ? evaluate(p) : RestrictedVector::kZero);
        }
        return v;
    }

    // Substitute z_i := 1 - z_i for every variable (domain unchanged).
    Gbf complemented() const {
        Gbf g(m_, q_, domain_);
        for (const Term& t : terms_) {
            std::vector<Literal> lits = t.literals;
            for (Literal& l : lits) l.complemented = !l.complemented;
            g.add_term(t.coeff, std::move(lits));
        }
        return g;
    }

    // Same function read over a different window.
    Gbf with_domain(Domain d) const {
        Gbf g(m_, q_, d);
        g.terms_ = terms_;
        return g;
    }

private:
    int mod_q(long long c) const {
        long long r = c % q_;
        if (r < 0) r += q_;
        return static_cast<int>(r);
    }

    int m_;
    int q_;
    Domain domain_;
    std::vector<Term> terms_;
};

}  // namespace ccseq
