#pragma once
// JSON artifact files and CSV export. The Z_q exponent arrays are the source
// of truth; complex images are derived. A structural zero (restriction
// mismatch) is stored as exponent -1.
//
// Schema:
// {
//   "kind": "gcp" | "cs" | "mocs" | "ccc",
//   "q": 2,
//   "length": 160,
//   "construction": { ...generation parameters... } | null,
//   "sets": [ { "label": "S0", "members": [ [e0, e1, ...], ... ] }, ... ]
// }

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "corr.hpp"
#include "gbf.hpp"

namespace ccseq {

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

struct Artifact {
    std::string kind;  // gcp | cs | mocs | ccc
    int q = 2;
    std::size_t length = 0;
    std::vector<std::string> labels;  // one per set
    CodeFamily family;
    nlohmann::ordered_json construction;  // generation parameters, or null
};

inline Artifact make_artifact(std::string kind, const CodeFamily& family,
                              std::vector<std::string> labels = {},
                              nlohmann::ordered_json construction = nullptr) {
    if (family.sets.empty()) throw io_error("artifact: empty family");
    Artifact a;
    a.kind = std::move(kind);
    a.q = family.sets.front().q();
    a.length = family.sets.front().length();
    a.family = family;
    a.construction = std::move(construction);
    if (labels.empty())
        for (std::size_t i = 0; i < family.sets.size(); ++i) labels.push_back("S" + std::to_string(i));
    if (labels.size() != family.sets.size()) throw io_error("artifact: one label per set required");
    a.labels = std::move(labels);
    return a;
}

inline nlohmann::ordered_json to_json(const Artifact& a) {
    nlohmann::ordered_json j;
    j["kind"] = a.kind;
    j["q"] = a.q;
    j["length"] = a.length;
    j["construction"] = a.construction;
    j["sets"] = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < a.family.sets.size(); ++s) {
        nlohmann::ordered_json set;
        set["label"] = a.labels[s];
        set["members"] = nlohmann::ordered_json::array();
        for (const RestrictedVector& m : a.family.sets[s].members) set["members"].push_back(m.exps);
        j["sets"].push_back(std::move(set));
    }
    return j;
}

inline Artifact artifact_from_json(const nlohmann::json& j) {
    Artifact a;
    try {
        a.kind = j.at("kind").get<std::string>();
        a.q = j.at("q").get<int>();
        a.length = j.at("length").get<std::size_t>();
        if (j.contains("construction") && !j.at("construction").is_null())
            a.construction = j.at("construction");
        for (const auto& set : j.at("sets")) {
            a.labels.push_back(set.at("label").get<std::string>());
            CodeSet cs;
            for (const auto& row : set.at("members")) {
                RestrictedVector v;
                v.q = a.q;
                v.exps = row.get<std::vector<int>>();
                cs.members.push_back(std::move(v));
            }
            a.family.sets.push_back(std::move(cs));
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("artifact: malformed json (") + e.what() + ")");
    }
    if (a.kind != "gcp" && a.kind != "cs" && a.kind != "mocs" && a.kind != "ccc")
        throw io_error("artifact: unknown kind '" + a.kind + "'");
    if (a.q < 2 || a.q % 2 != 0) throw io_error("artifact: q must be even and >= 2");
    if (a.family.sets.empty()) throw io_error("artifact: no sets");
    const std::size_t flock = a.family.sets.front().flock();
    for (const CodeSet& s : a.family.sets) {
        if (s.members.empty()) throw io_error("artifact: empty set");
        if (s.flock() != flock) throw io_error("artifact: sets disagree on flock size");
        for (const RestrictedVector& m : s.members) {
            if (m.exps.size() != a.length) throw io_error("artifact: ragged member length");
            for (int e : m.exps)
                if (e != RestrictedVector::kZero && (e < 0 || e >= a.q))
                    throw io_error("artifact: exponent out of range");
        }
    }
    if (a.kind == "gcp" && (a.family.sets.size() != 1 || flock != 2))
        throw io_error("artifact: a gcp holds exactly one set of two rows");
    if (a.kind == "cs" && a.family.sets.size() != 1)
        throw io_error("artifact: a cs holds exactly one set");
    return a;
}

inline void write_json(const std::string& path, const Artifact& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << to_json(a).dump(2) << '\n';
    if (!out) throw io_error("write failed: " + path);
}

inline Artifact read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("json parse error in ") + path + ": " + e.what());
    }
    return artifact_from_json(j);
}

// CSV export of the complex image, one row per sequence:
//   set_label,member_index,v0,v1,...
// q = 2 rows print as 1/-1/0; other q print fixed-format complex values.
inline void write_csv(const std::string& path, const Artifact& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    for (std::size_t s = 0; s < a.family.sets.size(); ++s) {
        for (std::size_t n = 0; n < a.family.sets[s].members.size(); ++n) {
            const RestrictedVector& m = a.family.sets[s].members[n];
            out << a.labels[s] << ',' << n;
            if (a.q == 2) {
                for (int e : m.exps)
                    out << ',' << (e == RestrictedVector::kZero ? 0 : (e == 0 ? 1 : -1));
            } else {
                std::ostringstream line;
                line.setf(std::ios::fixed);
                line.precision(12);
                for (const std::complex<double>& x : to_complex(m))
                    line << ',' << x.real() << (x.imag() < 0 ? '-' : '+') << std::abs(x.imag()) << 'i';
                out << line.str();
            }
            out << '\n';
        }
    }
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace ccseq
