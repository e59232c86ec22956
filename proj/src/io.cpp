#include "minkval/io.hpp"
#include "minkval/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace minkval {

using nlohmann::json;

std::string format_number(double x) {
    if (x == 0.0) x = 0.0; // normalize -0 so emitted text round-trips stably
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string body_to_json(const Polytope& K) {
    std::ostringstream os;
    os << "{\"dim\": " << K.dim_ambient << ", \"vertices\": [";
    for (size_t i = 0; i < K.vertices.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (size_t j = 0; j < K.vertices[i].size(); ++j) {
            if (j) os << ", ";
            os << format_number(K.vertices[i][j]);
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

Polytope body_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("dim") || !j.contains("vertices"))
        throw IOError("body json: missing dim or vertices");
    int dim = j["dim"].get<int>();
    std::vector<Vec> verts;
    for (const auto& row : j["vertices"]) {
        Vec v;
        for (const auto& x : row) v.push_back(x.get<double>());
        if (static_cast<int>(v.size()) != dim)
            throw IOError("body json: vertex length differs from dim");
        verts.push_back(std::move(v));
    }
    if (verts.empty()) throw IOError("body json: empty vertex list");
    return Polytope(std::move(verts), dim);
}

std::string polygon_to_json(const Polygon& P) {
    return body_to_json(polygon_to_polytope(P));
}

Polygon polygon_from_json(const std::string& text) {
    Polytope K = body_from_json(text);
    return polytope_to_polygon(K);
}

std::string measure_to_json(const AreaMeasureS1& mu) {
    std::ostringstream os;
    os << "{\"atoms\": [";
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
        if (i) os << ", ";
        os << "{\"angle\": " << format_number(mu.atoms[i].angle)
           << ", \"weight\": " << format_number(mu.atoms[i].weight) << "}";
    }
    os << "]}";
    return os.str();
}

AreaMeasureS1 measure_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("atoms")) throw IOError("measure json: missing atoms");
    std::vector<MeasureAtom> atoms;
    for (const auto& a : j["atoms"])
        atoms.push_back({a["angle"].get<double>(), a["weight"].get<double>()});
    return make_measure(std::move(atoms));
}

std::string operator_kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Difference: return "Difference";
        case OperatorKind::ComplexDifference: return "ComplexDifference";
        case OperatorKind::ComplexProjection: return "ComplexProjection";
        case OperatorKind::Det2Contra: return "Det2Contra";
        case OperatorKind::Det2Cova: return "Det2Cova";
    }
    throw IOError("unknown operator kind");
}

OperatorKind operator_kind_from_name(const std::string& name) {
    if (name == "Difference" || name == "D") return OperatorKind::Difference;
    if (name == "ComplexDifference" || name == "DC") return OperatorKind::ComplexDifference;
    if (name == "ComplexProjection" || name == "PiC") return OperatorKind::ComplexProjection;
    if (name == "Det2Contra" || name == "det2contra") return OperatorKind::Det2Contra;
    if (name == "Det2Cova" || name == "det2cova") return OperatorKind::Det2Cova;
    throw IOError("unknown operator kind: " + name);
}

std::string operator_to_json(const ValuationOperator& op) {
    std::ostringstream os;
    os << "{\"kind\": \"" << operator_kind_name(op.kind) << "\", ";
    if (op.kind != OperatorKind::Difference)
        os << "\"C\": " << polygon_to_json(op.C) << ", ";
    os << "\"m\": " << op.m << "}";
    return os.str();
}

ValuationOperator operator_from_json(const std::string& text) {
    json j = json::parse(text);
    ValuationOperator op;
    op.kind = operator_kind_from_name(j.at("kind").get<std::string>());
    op.m = j.value("m", 2);
    if (j.contains("C")) {
        // C may be a polygon body or an area measure; a measure is
        // materialized through the planar Minkowski existence theorem.
        if (j["C"].contains("atoms"))
            op.C = minkowski_reconstruct(measure_from_json(j["C"].dump()));
        else
            op.C = polygon_from_json(j["C"].dump());
    }
    return op;
}

namespace {

void report_body(std::ostringstream& os, const CheckReport& rep) {
    os << "{\"check\": \"" << rep.check << "\", \"tolerance\": "
       << format_number(rep.tolerance) << ", \"max_violation\": "
       << format_number(rep.max_violation) << ", \"pass\": "
       << (rep.pass ? "true" : "false") << ", \"cases\": [";
    for (size_t i = 0; i < rep.cases.size(); ++i) {
        const CheckCase& c = rep.cases[i];
        if (i) os << ", ";
        os << "{\"label\": \"" << c.label << "\", \"violation\": "
           << format_number(c.violation) << ", \"ok\": " << (c.ok ? "true" : "false");
        if (!c.note.empty()) os << ", \"note\": \"" << c.note << "\"";
        os << "}";
    }
    os << "]}";
}

} // namespace

std::string report_to_json(const CheckReport& rep) {
    std::ostringstream os;
    report_body(os, rep);
    return os.str();
}

std::string reports_to_json(const std::vector<CheckReport>& reps) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < reps.size(); ++i) {
        if (i) os << ", ";
        report_body(os, reps[i]);
    }
    os << "]";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IOError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace minkval
