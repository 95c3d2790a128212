#pragma once
// Peak-to-mean envelope power ratio of sequences under the standard
// N-subcarrier model: power(theta) = |sum_i s_i e^(2*pi*j*i*theta)|^2,
// sampled at theta = t/(N*L). The mean is the sequence energy sum|s_i|^2
// (equals N for full unit-modulus rows, support size for zero-padded
// restricted rows), so reported values are discretized lower bounds of the
// continuous PMEPR that sharpen as L grows.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "corr.hpp"
#include "gbf.hpp"

namespace ccseq {

struct EnvelopeProfile {
    std::size_t length = 0;      // sequence length N (ambient, zeros included)
    int oversample = 16;         // L
    double peak = 0.0;           // max instantaneous power over N*L samples
    double energy = 0.0;         // sum |s_i|^2 = mean instantaneous power
    std::size_t peak_index = 0;  // sample index t attaining the peak

    double pmepr() const { return energy > 0.0 ? peak / energy : 0.0; }
    std::size_t samples() const { return length * static_cast<std::size_t>(oversample); }
};

inline EnvelopeProfile envelope(const cvec& seq, int oversample = 16) {
    if (seq.empty()) throw std::invalid_argument("envelope: empty sequence");
    if (oversample < 1) throw std::invalid_argument("envelope: oversampling must be >= 1");
    EnvelopeProfile p;
    p.length = seq.size();
    p.oversample = oversample;
    for (const std::complex<double>& x : seq) p.energy += std::norm(x);
    const std::size_t total = p.samples();
    for (std::size_t t = 0; t < total; ++t) {
        const double theta = static_cast<double>(t) / static_cast<double>(total);
        std::complex<double> v{0.0, 0.0};
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>(i) * theta;
            v += seq[i] * std::complex<double>{std::cos(ang), std::sin(ang)};
        }
        const double power = std::norm(v);
        if (power > p.peak) {
            p.peak = power;
            p.peak_index = t;
        }
    }
    return p;
}

inline EnvelopeProfile envelope(const RestrictedVector& v, int oversample = 16) {
    return envelope(to_complex(v), oversample);
}

// PMEPR of each row of the set.
inline std::vector<EnvelopeProfile> row_pmepr(const CodeSet& set, int oversample = 16) {
    check_set(set, "row_pmepr");
    std::vector<EnvelopeProfile> out;
    out.reserve(set.flock());
    for (const RestrictedVector& m : set.members) out.push_back(envelope(m, oversample));
    return out;
}

// PMEPR of each column when the set is read as an M x N matrix.
inline std::vector<EnvelopeProfile> column_pmepr(const CodeSet& set, int oversample = 16) {
    check_set(set, "column_pmepr");
    std::vector<cvec> rows;
    rows.reserve(set.flock());
    for (const RestrictedVector& m : set.members) rows.push_back(to_complex(m));
    std::vector<EnvelopeProfile> out;
    out.reserve(set.length());
    for (std::size_t c = 0; c < set.length(); ++c) {
        cvec col;
        col.reserve(set.flock());
        for (const cvec& r : rows) col.push_back(r[c]);
        out.push_back(envelope(col, oversample));
    }
    return out;
}

}  // namespace ccseq
