// Command-line front end: generate bodies and operator descriptors, apply
// operators, run the property-check suites, run recovery, and render SVG.
//
// Exit codes: 0 pass, 1 property failure, 2 suite/input error, 3 recovery
// failure, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "minkval/errors.hpp"
#include "minkval/harness.hpp"
#include "minkval/hausdorff.hpp"
#include "minkval/io.hpp"
#include "minkval/planar_ops.hpp"
#include "minkval/recover.hpp"
#include "minkval/svg.hpp"
#include "minkval/valuations.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

using namespace minkval;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitError = 2;
constexpr int kExitRecoveryFailure = 3;
constexpr int kExitUsage = 64;

struct Shared {
    int m = 2;
    unsigned seed = 1;
    std::string dirs = "64"; // a count, or "axes" where that makes sense
    double tol_scale = 1.0;
    std::string out;
    std::string config;

    int dir_count() const {
        if (dirs == "axes") return 0;
        return std::stoi(dirs);
    }
};

// Flag precedence: explicit CLI flags > config file > defaults.
void overlay_config(CLI::App* cmd, Shared& sh) {
    if (sh.config.empty()) return;
    nlohmann::json j = nlohmann::json::parse(read_file(sh.config));
    auto maybe = [&](const char* flag, auto& target) {
        CLI::Option* opt = cmd->get_option_no_throw(flag);
        bool given = opt && opt->count() > 0;
        if (!given && j.contains(flag + 2)) // strip "--"
            target = j[flag + 2].get<std::decay_t<decltype(target)>>();
    };
    maybe("--m", sh.m);
    maybe("--seed", sh.seed);
    maybe("--tol-scale", sh.tol_scale);
    CLI::Option* dopt = cmd->get_option_no_throw("--dirs");
    if ((!dopt || dopt->count() == 0) && j.contains("dirs")) {
        // a count (number) or the string "axes"
        sh.dirs = j["dirs"].is_string() ? j["dirs"].get<std::string>()
                                        : std::to_string(j["dirs"].get<int>());
    }
}

void warn_large_m(const Shared& sh) {
    if (sh.m > 3)
        std::cerr << "warning: m = " << sh.m
                  << " is beyond the tested range {2,3}; hull costs grow quickly\n";
}

void emit(const Shared& sh, const std::string& content) {
    if (sh.out.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
    } else {
        write_file(sh.out, content);
    }
}

// Accepts a polygon body file or a measure file (reconstructed to a body).
Polygon load_polygon(const std::string& path) {
    std::string text = read_file(path);
    if (nlohmann::json::parse(text).contains("atoms"))
        return minkowski_reconstruct(measure_from_json(text));
    return polygon_from_json(text);
}

std::vector<Vec> direction_sample(int n, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vec> dirs;
    dirs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) dirs.push_back(random_direction(n, rng));
    return dirs;
}

// Operator choice from CLI flags; "identity" and "nonval" name the negative
// controls and are not serializable operator kinds.
struct OpChoice {
    std::string name;
    std::optional<ValuationOperator> op;
};

OpChoice resolve_operator(const std::string& op_name, const std::string& operator_path,
                          const std::string& c_path, int m) {
    OpChoice choice;
    if (!operator_path.empty()) {
        ValuationOperator op = operator_from_json(read_file(operator_path));
        choice.name = operator_kind_name(op.kind);
        choice.op = op;
        return choice;
    }
    choice.name = op_name;
    if (op_name == "identity" || op_name == "nonval" || op_name == "nonsl") return choice;
    ValuationOperator op;
    op.kind = operator_kind_from_name(op_name);
    op.m = m;
    if (op.kind != OperatorKind::Difference) {
        if (c_path.empty()) throw IOError("operator " + op_name + " needs --C <polygon.json>");
        op.C = load_polygon(c_path);
    }
    choice.op = op;
    return choice;
}

int cmd_gen(const std::string& shape, bool random, int dim, int vertices, int kgon,
            const std::string& op_name, const std::string& c_path, const Shared& sh) {
    if (!op_name.empty()) {
        ValuationOperator op;
        op.kind = operator_kind_from_name(op_name);
        op.m = sh.m;
        if (op.kind != OperatorKind::Difference) {
            if (c_path.empty()) throw IOError("gen --op needs --C <polygon.json>");
            op.C = load_polygon(c_path);
        }
        emit(sh, operator_to_json(op));
        return kExitOk;
    }
    if (random) {
        Polytope K = random_polytope(dim, vertices, sh.seed);
        emit(sh, body_to_json(K));
        return kExitOk;
    }
    if (shape == "square") {
        emit(sh, polygon_to_json(polygon_square()));
    } else if (shape == "triangle") {
        emit(sh, polygon_to_json(polygon_triangle()));
    } else if (shape == "disc") {
        emit(sh, polygon_to_json(polygon_disc(kgon)));
    } else if (shape == "segment") {
        emit(sh, polygon_to_json(polygon_segment({0.0, 0.0}, {0.0, -1.0})));
    } else if (shape == "cube") {
        emit(sh, body_to_json(make_cube(dim)));
    } else if (shape == "simplex") {
        emit(sh, body_to_json(make_simplex(dim)));
    } else {
        throw IOError("unknown shape: " + shape);
    }
    return kExitOk;
}

int cmd_apply(const OpChoice& choice, const std::string& k_path, const Shared& sh) {
    if (!choice.op)
        throw IOError("apply supports only the serializable operator kinds");
    const ValuationOperator& op = *choice.op;
    Polytope K = body_from_json(read_file(k_path));
    const int n = K.dim_ambient;
    if (n != 2 * op.m) {
        std::ostringstream os;
        os << "dimension mismatch: body has dim " << n << ", operator expects " << 2 * op.m;
        throw DimensionError(os.str());
    }
    ComplexStructure J = ComplexStructure::standard(op.m);

    if (op.kind == OperatorKind::Difference) {
        emit(sh, body_to_json(difference_body(K)));
        return kExitOk;
    }
    if (op.kind == OperatorKind::ComplexDifference) {
        emit(sh, body_to_json(complex_difference_body(op.C, K, J)));
        return kExitOk;
    }

    // Evaluator-valued operators: CSV of (direction, support value).
    SupportEvaluator h = make_valuation(op, J)(K);
    std::vector<Vec> dirs;
    if (sh.dirs == "axes") {
        for (int k = 0; k < n; ++k) {
            Vec e(static_cast<size_t>(n), 0.0);
            e[static_cast<size_t>(k)] = 1.0;
            dirs.push_back(e);
        }
    } else {
        dirs = direction_sample(n, sh.dir_count(), sh.seed);
    }
    std::ostringstream os;
    for (const Vec& w : dirs) {
        for (double x : w) os << format_number(x) << ",";
        os << format_number(h(w)) << "\n";
    }
    emit(sh, os.str());
    return kExitOk;
}

int cmd_check(const OpChoice& choice, const Shared& sh) {
    const int m = choice.op ? choice.op->m : sh.m;
    const int n = 2 * m;
    ComplexStructure J = ComplexStructure::standard(m);

    BodyValuation Z;
    bool contravariant = false;
    bool force_non_sl = false;
    int expected_degree = 1;
    Polygon C_for_uniqueness;
    bool has_c = false;
    if (choice.name == "identity") {
        Z = impostor_identity();
    } else if (choice.name == "nonval") {
        Z = impostor_volume_scaled_dc(polygon_square(), J);
    } else if (choice.name == "nonsl") {
        // D_C probed with a non-SL group element: the equivariance suite
        // must flag the determinant.
        ValuationOperator dc{OperatorKind::ComplexDifference, polygon_square(), m};
        Z = make_valuation(dc, J);
        force_non_sl = true;
    } else {
        Z = make_valuation(*choice.op, J);
        contravariant = operator_is_contravariant(choice.op->kind);
        expected_degree = operator_degree(*choice.op);
        if (choice.op->kind != OperatorKind::Difference) {
            C_for_uniqueness = choice.op->C;
            has_c = choice.op->kind == OperatorKind::ComplexDifference;
        } else {
            C_for_uniqueness = polygon_segment({0.0, 0.0}, {0.0, -1.0});
            has_c = true;
        }
    }

    std::vector<CheckReport> reports;
    bool any_error = false;
    auto dirs = direction_sample(n, std::max(1, sh.dir_count()), sh.seed + 17);

    try {
        Polytope P = random_polytope(n, n + 5, sh.seed + 1);
        std::mt19937_64 rng(sh.seed + 2);
        Vec nrm = random_direction(n, rng);
        Vec c(static_cast<size_t>(n), 0.0);
        for (const Vec& v : P.vertices) c = add(c, v);
        c = scale(c, 1.0 / static_cast<double>(P.size()));
        reports.push_back(check_valuation_property(Z, P, nrm, dot(nrm, c), dirs,
                                                   1e-7 * sh.tol_scale));
    } catch (const std::exception& e) {
        any_error = true;
        CheckReport rep;
        rep.check = "valuation_additivity";
        rep.pass = false;
        rep.cases.push_back({"suite error", 0.0, false, e.what()});
        reports.push_back(rep);
    }

    try {
        Polytope K = random_polytope(n, n + 4, sh.seed + 3);
        std::mt19937_64 rng(sh.seed + 4);
        std::vector<Vec> shifts;
        for (int i = 0; i < 6; ++i) shifts.push_back(scale(random_direction(n, rng), 0.7));
        reports.push_back(check_translation_invariance(Z, K, shifts, dirs,
                                                       1e-7 * sh.tol_scale));
    } catch (const std::exception& e) {
        any_error = true;
        CheckReport rep;
        rep.check = "translation_invariance";
        rep.pass = false;
        rep.cases.push_back({"suite error", 0.0, false, e.what()});
        reports.push_back(rep);
    }

    try {
        Polytope K = random_polytope(n, n + 4, sh.seed + 5);
        std::vector<LinearMap> group;
        if (force_non_sl) {
            LinearMap twice(mat_scale(Mat::identity(n), 2.0));
            twice.is_complex_linear = true;
            group.push_back(twice);
        } else {
            for (int i = 0; i < 3; ++i)
                group.push_back(random_sl(m, sh.seed + 10 + static_cast<unsigned>(i)));
        }
        reports.push_back(check_equivariance(Z, contravariant, K, group, dirs, J,
                                             1e-6 * sh.tol_scale));
    } catch (const std::exception& e) {
        any_error = true;
        CheckReport rep;
        rep.check = contravariant ? "sl_contravariance" : "sl_covariance";
        rep.pass = false;
        rep.cases.push_back({"suite error", 0.0, false, e.what()});
        reports.push_back(rep);
    }

    try {
        Polytope K = random_polytope(n, n + 4, sh.seed + 6);
        std::mt19937_64 rng(sh.seed + 7);
        Vec xi = random_direction(n, rng);
        HomogeneityProfile prof = estimate_homogeneity(Z, K, xi, default_t_grid(m),
                                                       1e-6 * sh.tol_scale);
        CheckReport rep;
        rep.check = "homogeneity_degree";
        rep.tolerance = 0.0;
        CheckCase cc;
        std::ostringstream os;
        os << "degrees {";
        for (int d : prof.degrees) os << " " << d;
        os << " }, expected { " << expected_degree << " }";
        cc.label = os.str();
        // The zero operator fits every degree, so an empty set passes too.
        bool ok = prof.degrees.empty() || prof.degrees == std::set<int>{expected_degree};
        cc.violation = ok ? 0.0 : 1.0;
        rep.add(std::move(cc));
        reports.push_back(rep);
    } catch (const std::exception& e) {
        any_error = true;
        CheckReport rep;
        rep.check = "homogeneity_degree";
        rep.pass = false;
        rep.cases.push_back({"suite error", 0.0, false, e.what()});
        reports.push_back(rep);
    }

    if (has_c) {
        try {
            Polygon shifted = polygon_translate(C_for_uniqueness, {0.8, -0.45});
            reports.push_back(uniqueness_identity_check(C_for_uniqueness, shifted, J, sh.seed + 8));
        } catch (const std::exception& e) {
            any_error = true;
            CheckReport rep;
            rep.check = "uniqueness_identity";
            rep.pass = false;
            rep.cases.push_back({"suite error", 0.0, false, e.what()});
            reports.push_back(rep);
        }
    }

    emit(sh, reports_to_json(reports));
    if (any_error) return kExitError;
    for (const CheckReport& rep : reports)
        if (!rep.pass) return kExitPropertyFailure;
    return kExitOk;
}

std::string pair_key(const Polytope& probe, const Vec& dir) {
    std::ostringstream os;
    os << body_to_json(probe) << "|";
    for (double x : dir) os << format_number(x) << ",";
    return os.str();
}

int cmd_recover(const OpChoice& choice, int G, int P, const std::string& report_path,
                const std::string& pairs_dir, const std::string& dump_dir,
                const Shared& sh) {
    const int m = choice.op ? choice.op->m : sh.m;
    const int n = 2 * m;
    ComplexStructure J = ComplexStructure::standard(m);

    BlackBoxValuation Z;
    if (!pairs_dir.empty()) {
        // Replay a directory of precomputed (probe, value) pairs.
        auto table = std::make_shared<std::map<std::string, double>>();
        for (const auto& entry : std::filesystem::directory_iterator(pairs_dir)) {
            if (entry.path().extension() != ".json") continue;
            nlohmann::json j = nlohmann::json::parse(read_file(entry.path().string()));
            Polytope probe = body_from_json(j.at("probe").dump());
            Vec xi;
            for (const auto& x : j.at("xi")) xi.push_back(x.get<double>());
            (*table)[pair_key(probe, xi)] = j.at("value").get<double>();
        }
        Z = [table](const Polytope& probe, const Vec& dir) {
            auto it = table->find(pair_key(probe, dir));
            if (it == table->end())
                throw IOError("recover --pairs: probe not found in the directory; "
                              "regenerate with --dump-pairs and matching G/P/m");
            return it->second;
        };
    } else if (choice.name == "identity") {
        Z = [](const Polytope& probe, const Vec& dir) { return support(probe, dir); };
    } else if (choice.name == "nonval") {
        BodyValuation v = impostor_volume_scaled_dc(polygon_square(), J);
        Z = [v](const Polytope& probe, const Vec& dir) { return v(probe)(dir); };
    } else {
        BodyValuation v = make_valuation(*choice.op, J);
        Z = [v](const Polytope& probe, const Vec& dir) { return v(probe)(dir); };
    }

    if (!dump_dir.empty()) {
        // Record every query the solver makes, for later --pairs replay.
        std::filesystem::create_directories(dump_dir);
        auto counter = std::make_shared<int>(0);
        BlackBoxValuation inner = Z;
        Z = [inner, dump_dir, counter](const Polytope& probe, const Vec& dir) {
            double v = inner(probe, dir);
            std::ostringstream name;
            name << dump_dir << "/pair_" << std::setw(5) << std::setfill('0')
                 << (*counter)++ << ".json";
            std::ostringstream os;
            os << "{\"probe\": " << body_to_json(probe) << ", \"xi\": [";
            for (size_t i = 0; i < dir.size(); ++i) {
                if (i) os << ", ";
                os << format_number(dir[i]);
            }
            os << "], \"value\": " << format_number(v) << "}";
            write_file(name.str(), os.str());
            return v;
        };
    }

    Vec u(static_cast<size_t>(n), 0.0);
    u[0] = 1.0;
    RecoverOptions opt;
    opt.grid_size = G;
    opt.probes_per_family = P;

    RecoverResult res;
    try {
        res = recover_C(Z, m, u, u, J, opt);
    } catch (const RecoveryFailed& e) {
        std::ostringstream os;
        os << "{\"recovered\": false, \"reason\": \"" << e.what()
           << "\", \"residual\": " << format_number(e.residual) << "}";
        if (!report_path.empty()) write_file(report_path, os.str());
        std::cerr << os.str() << "\n";
        return kExitRecoveryFailure;
    }

    emit(sh, polygon_to_json(res.C));
    if (!report_path.empty()) {
        std::ostringstream os;
        os << "{\"recovered\": true, \"residual\": " << format_number(res.residual)
           << ", \"measure\": " << measure_to_json(res.measure) << "}";
        write_file(report_path, os.str());
    }
    return kExitOk;
}

int cmd_report(const std::string& body_path, const std::string& measure_path,
               const std::string& project, const std::string& csv_path, const Shared& sh) {
    if (!measure_path.empty()) {
        AreaMeasureS1 mu = measure_from_json(read_file(measure_path));
        emit(sh, measure_to_svg(mu));
        return kExitOk;
    }
    if (body_path.empty()) throw IOError("report needs --body or --measure");
    Polytope K = body_from_json(read_file(body_path));

    if (!csv_path.empty()) {
        std::ostringstream os;
        for (const Vec& w : direction_sample(K.dim_ambient, std::max(1, sh.dir_count()), sh.seed)) {
            for (double x : w) os << format_number(x) << ",";
            os << format_number(support(K, w)) << "\n";
        }
        write_file(csv_path, os.str());
        return kExitOk;
    }

    Polygon P;
    if (K.dim_ambient == 2) {
        P = polytope_to_polygon(K);
    } else if (!project.empty()) {
        size_t comma = project.find(',');
        if (comma == std::string::npos) throw IOError("--project wants i,j");
        int i = std::stoi(project.substr(0, comma));
        int j = std::stoi(project.substr(comma + 1));
        if (i < 0 || j < 0 || i >= K.dim_ambient || j >= K.dim_ambient || i == j)
            throw IOError("--project indices out of range");
        std::vector<P2> pts;
        for (const Vec& v : K.vertices)
            pts.push_back({v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]});
        P = make_polygon(pts);
    } else {
        throw UnsupportedDimension(
            "report: body is not planar; pass --project i,j to draw a shadow");
    }
    emit(sh, polygon_to_svg(P));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minkowski valuation toolkit"};
    app.require_subcommand(1);

    Shared sh;
    std::string shape, op_name, operator_path, c_path, k_path;
    std::string body_path, measure_path, project, csv_path, report_path;
    std::string pairs_dir, dump_dir;
    bool random_body = false;
    int dim = 4, vertices = 10, kgon = 64, grid = 72, probes = 48;

    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--m", sh.m, "complex dimension m (ambient is 2m)");
        cmd->add_option("--seed", sh.seed, "rng seed");
        cmd->add_option("--dirs", sh.dirs, "direction sample count, or 'axes'");
        cmd->add_option("--tol-scale", sh.tol_scale, "tolerance multiplier");
        cmd->add_option("--out", sh.out, "output path (stdout if omitted)");
        cmd->add_option("--config", sh.config, "JSON config file");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate bodies and operator descriptors");
    gen->add_option("--shape", shape, "square|triangle|disc|segment|cube|simplex");
    gen->add_flag("--random", random_body, "random polytope on the sphere");
    gen->add_option("--dim", dim, "ambient dimension");
    gen->add_option("--vertices", vertices, "vertex count for --random");
    gen->add_option("--k", kgon, "vertex count of the disc polygon");
    gen->add_option("--op", op_name, "emit an operator descriptor instead");
    gen->add_option("--C", c_path, "classifying polygon for --op");
    add_shared(gen);

    CLI::App* apply = app.add_subcommand("apply", "apply an operator to a body");
    apply->add_option("--op", op_name, "D|DC|PiC|det2contra|det2cova");
    apply->add_option("--operator", operator_path, "operator descriptor JSON");
    apply->add_option("--C", c_path, "classifying polygon JSON");
    apply->add_option("--K", k_path, "input body JSON")->required();
    add_shared(apply);

    CLI::App* check = app.add_subcommand("check", "run the property-check suites");
    check->add_option("--op", op_name, "operator, or identity|nonval|nonsl controls")->required();
    check->add_option("--operator", operator_path, "operator descriptor JSON");
    check->add_option("--C", c_path, "classifying polygon JSON");
    add_shared(check);

    CLI::App* recover = app.add_subcommand("recover", "recover C from a black-box operator");
    recover->add_option("--op", op_name, "operator, or identity|nonval controls");
    recover->add_option("--operator", operator_path, "operator descriptor JSON");
    recover->add_option("--C", c_path, "classifying polygon JSON");
    recover->add_option("--G", grid, "angular grid size");
    recover->add_option("--P", probes, "probe count per family");
    recover->add_option("--report", report_path, "residual report path");
    recover->add_option("--pairs", pairs_dir, "directory of precomputed (probe, value) pairs");
    recover->add_option("--dump-pairs", dump_dir, "record queried pairs into a directory");
    add_shared(recover);

    CLI::App* report = app.add_subcommand("report", "SVG / CSV rendering");
    report->add_option("--body", body_path, "body JSON");
    report->add_option("--measure", measure_path, "measure JSON");
    report->add_option("--project", project, "coordinate pair i,j for shadows");
    report->add_option("--csv", csv_path, "write support samples CSV");
    add_shared(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::cerr << "usage error; see --help\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            overlay_config(gen, sh);
            warn_large_m(sh);
            return cmd_gen(shape, random_body, dim, vertices, kgon, op_name, c_path, sh);
        }
        if (apply->parsed()) {
            overlay_config(apply, sh);
            warn_large_m(sh);
            return cmd_apply(resolve_operator(op_name, operator_path, c_path, sh.m),
                             k_path, sh);
        }
        if (check->parsed()) {
            overlay_config(check, sh);
            warn_large_m(sh);
            return cmd_check(resolve_operator(op_name, operator_path, c_path, sh.m), sh);
        }
        if (recover->parsed()) {
            overlay_config(recover, sh);
            warn_large_m(sh);
            OpChoice choice;
            if (!pairs_dir.empty() && op_name.empty() && operator_path.empty())
                choice.name = "pairs";
            else
                choice = resolve_operator(op_name, operator_path, c_path, sh.m);
            return cmd_recover(choice, grid, probes, report_path, pairs_dir, dump_dir, sh);
        }
        if (report->parsed()) {
            overlay_config(report, sh);
            return cmd_report(body_path, measure_path, project, csv_path, sh);
        }
    } catch (const RecoveryFailed& e) {
        std::cerr << "recovery failed: " << e.what() << "\n";
        return kExitRecoveryFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
