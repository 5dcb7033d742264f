#include "naxray/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace naxray {

namespace {

json complex_to_json(const Cx& v) { return json::array({v.real(), v.imag()}); }

Cx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(const LatticePoint& z) {
    json a = json::array();
    for (Int c : z) a.push_back(c);
    return a;
}

LatticePoint point_from_json(const json& j) {
    LatticePoint z;
    for (const auto& c : j) z.push_back(c.get<Int>());
    return z;
}

json ratvec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rat_str(q));
    return a;
}

RatVec ratvec_from_json(const json& j) {
    RatVec v;
    for (const auto& s : j) v.push_back(rat_parse(s.get<std::string>()));
    return v;
}

void format_double(std::string& out, double x) {
    if (!std::isfinite(x)) throw DomainError("cannot serialize a non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

void dump_rec(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::null:
            out += "null";
            break;
        case json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case json::value_t::number_float:
            format_double(out, j.get<double>());
            break;
        case json::value_t::string:
            out += json(j.get<std::string>()).dump();  // escaping
            break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ',';
                first = false;
                dump_rec(e, out);
            }
            out += ']';
            break;
        }
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                dump_rec(it.value(), out);
            }
            out += '}';
            break;
        }
        default:
            throw DomainError("cannot serialize this JSON value type");
    }
}

}  // namespace

json to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    const int n = int(j.size());
    Mat m(n);
    for (int i = 0; i < n; ++i) {
        if (int(j[i].size()) != n) throw DomainError("matrix rows must have equal length");
        for (int k = 0; k < n; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

json to_json(const LatticeField& f) {
    json entries = json::array();
    for (const auto& [z, m] : f.values)
        entries.push_back(json{{"z", point_to_json(z)}, {"m", to_json(m)}});
    return json{{"format", kFormatTag},
                {"d", f.d},
                {"n", f.n},
                {"r", f.r},
                {"regime", f.regime == Regime::multiplicative ? "multiplicative" : "additive"},
                {"entries", std::move(entries)}};
}

LatticeField field_from_json(const json& j) {
    LatticeField f;
    f.d = j.at("d").get<int>();
    f.n = j.at("n").get<int>();
    f.r = j.at("r").get<double>();
    const std::string regime = j.at("regime").get<std::string>();
    if (regime == "multiplicative")
        f.regime = Regime::multiplicative;
    else if (regime == "additive")
        f.regime = Regime::additive;
    else
        throw DomainError("unknown regime '" + regime + "'");
    for (const auto& e : j.at("entries")) {
        Mat m = mat_from_json(e.at("m"));
        if (m.order() != f.n) throw DomainError("field entry order mismatch");
        f.values[point_from_json(e.at("z"))] = std::move(m);
    }
    return f;
}

json to_json(const Sinogram& s) {
    json meta{{"d", s.d}, {"n", s.n}, {"r", s.r}, {"transform_kind", s.transform_kind}};
    if (s.plan_id) meta["plan_id"] = *s.plan_id;
    json rays = json::array();
    for (const auto& e : s.rays)
        rays.push_back(json{{"base", ratvec_to_json(e.ray.base)},
                            {"dir", point_to_json(e.ray.dir)},
                            {"value", to_json(e.value)}});
    return json{{"format", kFormatTag}, {"meta", std::move(meta)}, {"rays", std::move(rays)}};
}

Sinogram sinogram_from_json(const json& j) {
    Sinogram s;
    const json& meta = j.at("meta");
    s.d = meta.at("d").get<int>();
    s.n = meta.at("n").get<int>();
    s.r = meta.at("r").get<double>();
    s.transform_kind = meta.at("transform_kind").get<std::string>();
    if (meta.contains("plan_id")) s.plan_id = meta.at("plan_id").get<std::string>();
    for (const auto& e : j.at("rays")) {
        SinogramEntry entry;
        entry.ray.base = ratvec_from_json(e.at("base"));
        entry.ray.dir = point_from_json(e.at("dir"));
        entry.value = mat_from_json(e.at("value"));
        s.rays.push_back(std::move(entry));
    }
    return s;
}

json to_json(const ReconstructionPlan& p) {
    json entries = json::array();
    for (const auto& e : p.entries) {
        json chords = json::array();
        for (const auto& c : e.chords)
            chords.push_back(json{{"cell", point_to_json(c.cell)}, {"length", c.length}});
        entries.push_back(json{{"z", point_to_json(e.z)},
                               {"layer", e.layer},
                               {"x", ratvec_to_json(e.x)},
                               {"y", ratvec_to_json(e.y)},
                               {"dir", point_to_json(e.ray.dir)},
                               {"chords", std::move(chords)}});
    }
    return json{{"format", kFormatTag},
                {"r", p.r},
                {"M", p.M},
                {"d", p.d},
                {"entries", std::move(entries)}};
}

ReconstructionPlan plan_from_json(const json& j) {
    ReconstructionPlan p;
    p.r = j.at("r").get<double>();
    p.M = j.at("M").get<double>();
    p.d = j.at("d").get<int>();
    for (const auto& e : j.at("entries")) {
        PlanEntry entry;
        entry.z = point_from_json(e.at("z"));
        entry.layer = e.at("layer").get<int>();
        entry.x = ratvec_from_json(e.at("x"));
        entry.y = ratvec_from_json(e.at("y"));
        entry.ray.base = entry.y;
        entry.ray.dir = point_from_json(e.at("dir"));
        // The shrink factor is implied by y = (1 - eps) * x; the first
        // vertex coordinate is never zero.
        entry.epsilon = 1 - entry.y[0] / entry.x[0];
        for (const auto& c : e.at("chords")) {
            CellChord chord;
            chord.cell = point_from_json(c.at("cell"));
            chord.length = c.at("length").get<double>();
            // Entry/exit parameters are not serialized; order in the
            // array is the crossing order, which is what consumers use.
            entry.chords.push_back(std::move(chord));
        }
        p.entries.push_back(std::move(entry));
    }
    return p;
}

json to_json(const ReconReport& r) {
    json per_cell = json::array();
    for (const auto& [z, res] : r.residuals)
        per_cell.push_back(json{{"z", point_to_json(z)}, {"residual", res}});
    return json{{"format", kFormatTag},
                {"measurements", r.measurements},
                {"layers", r.layers},
                {"wall_time_s", r.wall_time_s},
                {"max_residual", r.max_residual},
                {"per_cell", std::move(per_cell)}};
}

std::string dump_deterministic(const json& j) {
    std::string out;
    dump_rec(j, out);
    out += '\n';
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write file: " + path);
    out << content;
}

json load_document(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw DomainError("malformed JSON in " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("format") || j["format"] != kFormatTag)
        throw DomainError(path + " is not a " + std::string(kFormatTag) + " document");
    return j;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

}  // namespace naxray
