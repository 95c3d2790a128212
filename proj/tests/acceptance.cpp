// Acceptance gate for the complementary-sequence toolkit. Runs every
// advertised guarantee end to end and prints exactly one PASS/FAIL line per
// criterion; the process exit code is the number of failed criteria.
//
// Intentionally not a doctest binary: this is the contract check, kept free
// of framework machinery so the output reads as a checklist.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccseq/construct.hpp"
#include "ccseq/corr.hpp"
#include "ccseq/gbf.hpp"
#include "ccseq/io.hpp"
#include "ccseq/pmepr.hpp"
#include "ccseq/quadgraph.hpp"
#include "cli_helpers.hpp"
#include "glue_variant.hpp"
#include "specs.hpp"

using namespace ccseq;
using nlohmann::json;

namespace {

constexpr double kPmeprSlack = 1e-6;

struct Gate {
    int failures = 0;

    // fn returns true on success and may append to `info`, which is printed
    // either way (diagnostics on failure, counts on success).
    void criterion(int id, const std::string& title, double limit_seconds,
                   const std::function<bool(std::string&)>& fn) {
        std::string info;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = fn(info);
        } catch (const std::exception& e) {
            ok = false;
            if (!info.empty()) info += "; ";
            info += std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && limit_seconds > 0.0 && secs > limit_seconds) {
            ok = false;
            std::ostringstream os;
            os << "exceeded the " << limit_seconds << " s budget";
            if (!info.empty()) info += "; ";
            info += os.str();
        }
        std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                    secs, info.empty() ? "" : " -- ", info.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

CodeSet pair_of(const ConstructionSpec& s) {
    const auto [d, e] = gcp_pair(s);
    CodeSet set;
    set.members = {d, e};
    return set;
}

ConstructionSpec ten_spec(int m, std::vector<QuadTerm> quad = {}, std::vector<int> victims = {}) {
    ConstructionSpec s;
    s.family = Family::ten;
    s.m = m;
    s.q = 2;
    s.quadratic = std::move(quad);
    s.victims = std::move(victims);
    return s;
}

Gbf random_gbf(std::mt19937& rng, int m, int q) {
    Gbf f(m, q, Domain::full(m));
    std::uniform_int_distribution<int> nterms(1, 6);
    std::uniform_int_distribution<int> coeff(0, q - 1);
    std::uniform_int_distribution<int> degree(0, std::min(3, m));
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<int> vars(static_cast<std::size_t>(m));
    std::iota(vars.begin(), vars.end(), 0);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::shuffle(vars.begin(), vars.end(), rng);
        const int d = degree(rng);
        std::vector<Literal> lits;
        for (int i = 0; i < d; ++i) lits.push_back({vars[static_cast<std::size_t>(i)], flip(rng) == 1});
        f.add_term(coeff(rng), lits);
    }
    return f;
}

std::vector<int> random_subset(std::mt19937& rng, int m, int size) {
    std::vector<int> vars(static_cast<std::size_t>(m));
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(static_cast<std::size_t>(size));
    std::sort(vars.begin(), vars.end());
    return vars;
}

double max_abs_diff(const cvec& a, const cvec& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// ---- criteria ----

bool c1_length160_pair(std::string& info) {
    const CorrelationReport r = verify_gcp(pair_of(testutil::len160_spec()));
    std::ostringstream os;
    os << "peak " << r.peak << ", exact integer arithmetic";
    info = os.str();
    return r.pass && r.exact && r.peak == 80.0 && r.length == 160;
}

bool c2_length160_family(std::string& info) {
    const CorrelationReport r = verify_ccc(ccc(testutil::len160_spec()));
    std::ostringstream os;
    os << "K=" << r.sets << " M=" << r.flock << " N=" << r.length;
    info = os.str();
    return r.pass && r.exact && r.sets == 8 && r.flock == 8 && r.length == 160;
}

bool c3_length208_family_and_control(std::string& info) {
    const ConstructionSpec spec = testutil::len208_spec();
    const CorrelationReport r = verify_ccc(ccc(spec));
    if (!(r.pass && r.exact && r.sets == 4 && r.flock == 4 && r.length == 208)) {
        info = "the length-208 family itself failed";
        return false;
    }

    // negative control: the same construction with the two degenerate glue
    // products left in place must fail, and we print where.
    const Gbf variant = testutil::thirteen_glue_variant(spec);
    const Endpoints ep = resolve_endpoints(spec);
    const CodeSet s0 = mocs_set(variant, spec.victims, ep.beta2, 0);
    const CorrelationReport rv = verify_cs(s0);
    if (rv.pass) {
        info = "the near-miss control unexpectedly verifies";
        return false;
    }
    std::vector<std::pair<long, double>> bad;
    for (long s = 1; s < static_cast<long>(s0.length()); ++s) {
        const double mag = std::abs(aacs(s0, s));
        if (mag > 1e-9) bad.emplace_back(s, mag);
    }
    if (bad.empty()) {
        info = "control failed but no offending shift was found";
        return false;
    }
    std::ostringstream os;
    os << "family K=4 M=4 N=208 verified; control fails at " << bad.size() << " shifts:";
    for (const auto& [s, mag] : bad) os << " (" << s << ", " << mag << ")";
    info = os.str();
    return true;
}

bool c4_deletion_sweep(std::string& info) {
    int tuples = 0;
    int verified = 0;
    bool all_ok = true;
    for (int m : {5, 6, 7}) {
        const int low = m - 4;
        std::vector<std::pair<int, int>> all_edges;
        for (int i = 0; i < low; ++i)
            for (int j = i + 1; j < low; ++j) all_edges.emplace_back(i, j);
        for (int mask = 0; mask < (1 << all_edges.size()); ++mask) {
            std::vector<QuadTerm> quad;
            for (std::size_t t = 0; t < all_edges.size(); ++t)
                if (mask >> t & 1) quad.push_back({all_edges[t].first, all_edges[t].second, 1});
            const QuadGraph g = graph_of(quad, low, 2);
            for (const std::vector<int>& victims : path_reducing_sets(g, low - 1)) {
                const int k = static_cast<int>(victims.size());
                for (int word = 0; word < (1 << k); ++word) {
                    std::vector<int> bits(static_cast<std::size_t>(k));
                    for (int b = 0; b < k; ++b) bits[static_cast<std::size_t>(b)] = (word >> b) & 1;
                    ConstructionSpec base = ten_spec(m, quad, victims);
                    base.victim_bits = bits;
                    const Endpoints ep = resolve_endpoints(base);
                    std::vector<int> betas{ep.beta1};
                    if (ep.beta2 != ep.beta1) betas.push_back(ep.beta2);
                    for (int b1 : betas) {
                        ++tuples;
                        for (int lin : {0, 1}) {
                            ConstructionSpec s = base;
                            s.beta1 = b1;
                            s.linear.assign(static_cast<std::size_t>(low), lin);
                            const CorrelationReport r = verify_gcp(pair_of(s));
                            ++verified;
                            if (!(r.pass && r.exact)) all_ok = false;
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << tuples << " deletion tuples, " << verified << " pairs verified exactly";
    info = os.str();
    return all_ok && tuples == 161 && verified == 322 && verified >= 100;
}

bool c5_restriction_support(std::string& info) {
    ConstructionSpec a = ten_spec(6, {{0, 1, 1}}, {0});
    ConstructionSpec b = ten_spec(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, {0, 1, 2});
    int checked = 0;
    for (const ConstructionSpec& s : {a, b}) {
        const auto [d, e] = gcp_pair(s);
        if (d.support() != 20 || e.support() != 20) {
            info = "unexpected surviving-sample count";
            return false;
        }
        CodeSet pair;
        pair.members = {d, e};
        if (!verify_gcp(pair).pass) {
            info = "restricted pair failed verification";
            return false;
        }
        checked += 2;
    }
    std::ostringstream os;
    os << checked << " rows, 20 surviving samples each";
    info = os.str();
    return true;
}

bool c6_partition_and_bilinearity(std::string& info) {
    std::mt19937 rng(20260825u);
    std::uniform_int_distribution<int> pick_m(4, 8);
    std::uniform_int_distribution<int> pick_q(0, 1);
    double worst_partition = 0.0;
    double worst_bilinear = 0.0;
    for (int iter = 0; iter < 50; ++iter) {
        const int m = pick_m(rng);
        const int q = pick_q(rng) == 0 ? 2 : 4;
        const Gbf f = random_gbf(rng, m, q);
        const Gbf g = random_gbf(rng, m, q);
        std::uniform_int_distribution<int> pick_sz(1, std::min(3, m));
        const std::vector<int> fv = random_subset(rng, m, pick_sz(rng));
        const std::vector<int> gv = random_subset(rng, m, pick_sz(rng));

        auto pieces = [](const Gbf& h, const std::vector<int>& vars) {
            std::vector<cvec> out;
            for (int word = 0; word < (1 << vars.size()); ++word) {
                std::vector<int> bits(vars.size());
                for (std::size_t b = 0; b < vars.size(); ++b) bits[b] = (word >> b) & 1;
                out.push_back(to_complex(h.restricted(vars, bits)));
            }
            return out;
        };
        const std::vector<cvec> fp = pieces(f, fv);
        const std::vector<cvec> gp = pieces(g, gv);
        const cvec ff = to_complex(f.sequence());
        const cvec gf = to_complex(g.sequence());

        // the restrictions partition the sequence sample by sample
        for (const auto& [parts, full] : {std::pair{&fp, &ff}, std::pair{&gp, &gf}}) {
            cvec sum(full->size(), {0.0, 0.0});
            for (const cvec& p : *parts)
                for (std::size_t i = 0; i < p.size(); ++i) sum[i] += p[i];
            worst_partition = std::max(worst_partition, max_abs_diff(sum, *full));
        }

        // correlation is bilinear in the pieces: cross and auto
        const cvec cross = full_accf(ff, gf);
        cvec accum(cross.size(), {0.0, 0.0});
        for (const cvec& a : fp)
            for (const cvec& b : gp) {
                const cvec part = full_accf(a, b);
                for (std::size_t i = 0; i < part.size(); ++i) accum[i] += part[i];
            }
        worst_bilinear = std::max(worst_bilinear, max_abs_diff(accum, cross));

        const cvec autoc = full_accf(ff, ff);
        cvec aaccum(autoc.size(), {0.0, 0.0});
        for (const cvec& a : fp)
            for (const cvec& b : fp) {
                const cvec part = full_accf(a, b);
                for (std::size_t i = 0; i < part.size(); ++i) aaccum[i] += part[i];
            }
        worst_bilinear = std::max(worst_bilinear, max_abs_diff(aaccum, autoc));
    }
    std::ostringstream os;
    os << "50 random functions; worst partition error " << worst_partition
       << ", worst bilinearity error " << worst_bilinear;
    info = os.str();
    return worst_partition <= 1e-12 && worst_bilinear <= 1e-9;
}

bool c7_envelope_bounds(std::string& info) {
    double worst_row = 0.0;
    const std::vector<ConstructionSpec> row_specs = {
        ten_spec(5), ten_spec(6, {{0, 1, 1}}), ten_spec(7, {{0, 1, 1}, {1, 2, 1}}),
        testutil::len160_spec()};
    for (const ConstructionSpec& s : row_specs) {
        const auto [d, e] = gcp_pair(s);
        for (const RestrictedVector& v : {d, e})
            worst_row = std::max(worst_row, envelope(v, 16).pmepr());
    }
    if (worst_row > 2.0 + kPmeprSlack) {
        std::ostringstream os;
        os << "row envelope ratio " << worst_row << " exceeds 2";
        info = os.str();
        return false;
    }

    const ConstructionSpec spec = testutil::len160_spec();
    const CodeFamily fam = ccc(spec);
    double worst_col = 0.0;
    for (const std::vector<int>& perm : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        for (const CodeSet& s : fam.sets) {
            const CodeSet shifted = pmepr_offset(s, spec, perm);
            for (const EnvelopeProfile& c : column_pmepr(shifted, 16))
                worst_col = std::max(worst_col, c.pmepr());
        }
    }
    std::ostringstream os;
    os << "worst row ratio " << worst_row << ", worst offset-column ratio " << worst_col
       << " (both bounds 2 + " << kPmeprSlack << ")";
    info = os.str();
    return worst_col <= 2.0 + kPmeprSlack;
}

bool c8_spectral_vs_direct(std::string& info) {
    std::mt19937 rng(424242u);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<int> zero(0, 9);
    const std::vector<std::size_t> lengths = {20, 160, 208};
    double worst = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = lengths[static_cast<std::size_t>(iter) % lengths.size()];
        auto rand_vec = [&] {
            cvec v(n);
            for (auto& x : v) {
                if (zero(rng) == 0) {
                    x = {0.0, 0.0};  // sprinkle structural zeros
                } else {
                    const double a = phase(rng);
                    x = {std::cos(a), std::sin(a)};
                }
            }
            return v;
        };
        const cvec d = rand_vec();
        const cvec e = rand_vec();
        const cvec fast = full_accf(d, e);
        for (long s = -(static_cast<long>(n) - 1); s < static_cast<long>(n); ++s) {
            const std::complex<double> direct = accf(d, e, s);
            worst = std::max(worst,
                             std::abs(fast[static_cast<std::size_t>(s + static_cast<long>(n) - 1)] -
                                      direct));
        }
    }
    std::ostringstream os;
    os << "100 random pairs, worst disagreement " << worst;
    info = os.str();
    return worst <= 1e-9;
}

bool c9_determinism_and_roundtrip(std::string& info) {
    namespace fs = std::filesystem;
    const fs::path a = fs::temp_directory_path() / "ccseq_acc_a";
    const fs::path b = fs::temp_directory_path() / "ccseq_acc_b";
    fs::remove_all(a);
    fs::remove_all(b);
    if (testutil::run_cli("demo --outdir " + a.string()).exit_code != 0 ||
        testutil::run_cli("demo --outdir " + b.string()).exit_code != 0) {
        info = "demo run failed";
        return false;
    }
    const std::vector<std::string> files = {"example1.json", "example1.csv", "example2.json",
                                            "example3.json", "example4.json", "manifest.json"};
    for (const std::string& f : files) {
        const std::string ta = testutil::slurp((a / f).string());
        if (ta.empty() || ta != testutil::slurp((b / f).string())) {
            info = "regenerated " + f + " differs between runs";
            return false;
        }
    }

    const json manifest = json::parse(testutil::slurp((a / "manifest.json").string()));
    if (!manifest.at("all_pass").get<bool>()) {
        info = "manifest reports a failure";
        return false;
    }
    for (const json& entry : manifest.at("examples")) {
        const std::string file = entry.at("file").get<std::string>();
        const Artifact art = read_json((a / file).string());
        CorrelationReport r;
        if (art.kind == "gcp") r = verify_gcp(art.family.sets.front());
        else if (art.kind == "cs") r = verify_cs(art.family.sets.front());
        else if (art.kind == "mocs") r = verify_mocs(art.family);
        else r = verify_ccc(art.family);
        if (r.pass != entry.at("pass").get<bool>() || !r.pass) {
            info = "stored verdict for " + file + " does not match recomputation";
            return false;
        }
        if (testutil::run_cli("verify " + (a / file).string()).exit_code != 0) {
            info = "command-line verify rejected " + file;
            return false;
        }
    }
    std::ostringstream os;
    os << files.size() << " files byte-identical across runs; all artifacts re-verify";
    info = os.str();
    return true;
}

bool c10_corruption_is_caught(std::string& info) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ccseq_acc_a";  // produced by criterion 9
    const std::vector<std::string> artifacts = {"example1.json", "example2.json", "example3.json",
                                                "example4.json"};
    int caught = 0;
    for (const std::string& name : artifacts) {
        const fs::path src = dir / name;
        if (!fs::exists(src)) {
            info = "missing demo artifact " + name + " (criterion 9 must run first)";
            return false;
        }
        json j = json::parse(testutil::slurp(src.string()));
        auto& row = j.at("sets").at(0).at("members").at(0);
        bool flipped = false;
        const int q = j.at("q").get<int>();
        for (auto& v : row) {
            const int e = v.get<int>();
            if (e != RestrictedVector::kZero) {
                v = (e + 1) % q;
                flipped = true;
                break;
            }
        }
        if (!flipped) {
            info = "no live sample to corrupt in " + name;
            return false;
        }
        const fs::path bad = dir / ("corrupt_" + name);
        std::ofstream(bad) << j.dump(2) << '\n';

        const Artifact art = read_json(bad.string());
        CorrelationReport r;
        if (art.kind == "gcp") r = verify_gcp(art.family.sets.front());
        else if (art.kind == "cs") r = verify_cs(art.family.sets.front());
        else if (art.kind == "mocs") r = verify_mocs(art.family);
        else r = verify_ccc(art.family);
        if (r.pass) {
            info = "corrupted " + name + " still verifies";
            return false;
        }
        if (r.worst_shift == 0) {
            info = "corrupted " + name + " reported no nonzero offending shift";
            return false;
        }
        if (testutil::run_cli("verify " + bad.string()).exit_code != 1) {
            info = "command-line verify did not exit 1 for corrupted " + name;
            return false;
        }
        ++caught;
    }
    std::ostringstream os;
    os << caught << "/4 corrupted artifacts rejected with a nonzero offending shift";
    info = os.str();
    return caught == 4;
}

}  // namespace

int main() {
    std::printf("acceptance gate: complementary-sequence toolkit\n");
    Gate gate;
    gate.criterion(1, "length-160 pair: exact off-peak cancellation, peak 80", 1.0,
                   c1_length160_pair);
    gate.criterion(2, "length-160 family: 8 sets x 8 rows, complete and exact", 10.0,
                   c2_length160_family);
    gate.criterion(3, "length-208 family verifies; near-miss glue control fails", 10.0,
                   c3_length208_family_and_control);
    gate.criterion(4, "every path-recovering deletion pattern (m = 5, 6, 7) yields a pair", 300.0,
                   c4_deletion_sweep);
    gate.criterion(5, "one free low variable leaves 20 surviving samples and a valid pair", 0.0,
                   c5_restriction_support);
    gate.criterion(6, "restriction pieces partition the sequence and correlation is bilinear", 0.0,
                   c6_partition_and_bilinearity);
    gate.criterion(7, "envelope power stays within twice the mean: rows and offset columns", 120.0,
                   c7_envelope_bounds);
    gate.criterion(8, "spectral correlation matches the direct definition", 0.0,
                   c8_spectral_vs_direct);
    gate.criterion(9, "regeneration is byte-identical and artifacts round-trip", 0.0,
                   c9_determinism_and_roundtrip);
    gate.criterion(10, "a flipped sample in any artifact is caught with a nonzero shift", 0.0,
                    c10_corruption_is_caught);
    if (gate.failures == 0)
        std::printf("acceptance gate: all 10 criteria passed\n");
    else
        std::printf("acceptance gate: %d criterion(s) failed\n", gate.failures);
    return gate.failures;
}
