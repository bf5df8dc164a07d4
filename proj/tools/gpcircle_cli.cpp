// Command-line front end: searches for, constructs, and certifies sets
// of four rational points in geometric progression on circles with
// rational radius.
//
// Data goes to stdout (or --out); progress and summaries go to stderr,
// so pipelines stay clean.  All numbers are exact rational strings.
// Exit codes: 0 success, 1 data-level failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gpcircle/gpcircle.hpp"

namespace {

using namespace gpc;

constexpr int kExitOk = 0;
constexpr int kExitDataFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat_arg(const std::string& text, const char* what) {
    try {
        return parse_rat(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": expected a rational like 5/3, got '" + text + "'");
    }
}

std::pair<Rat, Rat> parse_point_arg(const std::string& text, const char* what) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError(std::string(what) + ": expected 'x,y', got '" + text + "'");
    return {parse_rat_arg(text.substr(0, comma), what), parse_rat_arg(text.substr(comma + 1), what)};
}

std::vector<long long> parse_coeffs_arg(const std::string& text, std::size_t expected,
                                        const char* what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": expected integers, got '" + text + "'");
        }
    }
    if (out.size() != expected)
        throw UsageError(std::string(what) + ": expected " + std::to_string(expected) +
                         " comma-separated integers");
    return out;
}

/// Resolve --out against GPCIRCLE_OUT_DIR and stream the payload.
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::filesystem::path path(out_path);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("GPCIRCLE_OUT_DIR"); dir != nullptr && *dir != '\0')
            path = std::filesystem::path(dir) / path;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path.string());
    file << payload;
    if (!payload.empty() && payload.back() != '\n') file << '\n';
    if (!file.good()) throw std::runtime_error("write failed: " + path.string());
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    std::int64_t bound = 0;
    std::string shard;
    std::string format = "json";
    std::string out;
    unsigned threads = 0;
};

int run_search(const SearchArgs& args) {
    SearchConfig cfg;
    cfg.bound = args.bound;
    if (!args.shard.empty()) {
        auto slash = args.shard.find('/');
        try {
            if (slash == std::string::npos) throw std::invalid_argument(args.shard);
            cfg.shard_index = std::stoi(args.shard.substr(0, slash));
            cfg.shard_count = std::stoi(args.shard.substr(slash + 1));
        } catch (const std::exception&) {
            throw UsageError("--shard: expected INDEX/COUNT, got '" + args.shard + "'");
        }
        if (cfg.shard_count < 1 || cfg.shard_index < 0 || cfg.shard_index >= cfg.shard_count)
            throw UsageError("--shard: index must satisfy 0 <= index < count");
    }
    unsigned threads = args.threads != 0 ? args.threads : std::max(1u, std::thread::hardware_concurrency());
    SearchReport report = search_parallel(cfg, threads);

    std::string payload;
    if (args.format == "csv") {
        std::string csv = csv_header() + "\n";
        for (const auto& hit : report.witnesses) csv += csv_row(hit) + "\n";
        payload = csv;
    } else {
        Json arr = Json::array();
        for (const auto& hit : report.witnesses) arr.push_back(search_hit_to_json(hit));
        payload = arr.dump(2);
    }
    emit(args.out, payload);
    std::cerr << "search: bound " << args.bound << ", shard " << cfg.shard_index << "/"
              << cfg.shard_count << ": " << report.stats.enumerated << " triples enumerated, "
              << report.stats.filter_survivors << " passed the discriminant filter, "
              << report.stats.passing << " yielded witnesses, " << report.witnesses.size()
              << " distinct\n";
    return kExitOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
    std::string family;
    std::string t;
    std::string r = "5/3";
    std::string point;
    std::string coeffs;
    long long multiple = 0;
    int max_coeff = 0;
    std::int64_t height_bound = 0;
    std::string format = "json";
    std::string out;
};

Json family_json(const CanonicalWitness& w, const std::string& family, Json source_extra) {
    Json j = witness_to_json(w);
    Json src;
    src["family"] = family;
    for (auto& [key, value] : source_extra.items()) src[key] = value;
    src["r"] = to_string(w.ratio);
    j["source"] = std::move(src);
    return j;
}

/// Drive curve points through a quartic-side pipeline; collects one
/// entry per distinct canonical witness.
template <class MapFn, class WitnessFn>
std::vector<Json> stream_family(const WeierstrassCurve& curve, const std::vector<CurvePoint>& gens,
                                int max_coeff, const std::string& family, MapFn&& to_quartic,
                                WitnessFn&& to_witness) {
    PointStream stream(curve, gens, max_coeff);
    std::set<CanonicalWitness> seen;
    std::vector<Json> out;
    while (auto p = stream.next()) {
        QuarticPoint q{};
        try {
            q = to_quartic(p->x(), p->y());
        } catch (const ExcludedLocus&) {
            continue;
        }
        auto w = to_witness(q.X, q.Y);
        if (!w || !seen.insert(*w).second) continue;
        out.push_back(family_json(*w, family,
                                  Json{{"curve_point", Json::array({to_string(p->x()), to_string(p->y())})}}));
    }
    return out;
}

int run_family(const FamilyArgs& args) {
    std::vector<Json> results;
    std::string empty_reason;

    if (args.family == "both-axis") {
        if (args.t.empty()) throw UsageError("family both-axis requires --t");
        Rat t = parse_rat_arg(args.t, "--t");
        try {
            CanonicalWitness w = family_both_axis(t);
            results.push_back(family_json(w, "both-axis", Json{{"t", to_string(t)}}));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (args.family == "one-axis") {
        Rat r = parse_rat_arg(args.r, "--r");
        if (r <= 0 || r == 1) throw UsageError("--r: ratio must be positive and != 1");
        auto push_quartic_point = [&](const Rat& X, const Rat& Y, Json source_extra) {
            auto w = witness_one_axis(r, X, Y);
            if (w)
                results.push_back(family_json(*w, "one-axis", std::move(source_extra)));
            else
                empty_reason = "degenerate progression";
        };
        if (!args.point.empty()) {
            auto [X, Y] = parse_point_arg(args.point, "--point");
            if (!on_quartic(quartic_one_axis(r), {X, Y}))
                throw UsageError("--point: not on the quartic model for this ratio");
            push_quartic_point(X, Y, Json{{"curve_point", Json::array({to_string(X), to_string(Y)})}});
        } else if (args.height_bound > 0) {
            std::set<CanonicalWitness> seen;
            for (const auto& p : quartic_point_search(quartic_one_axis(r), args.height_bound)) {
                auto w = witness_one_axis(r, p.X, p.Y);
                if (w && seen.insert(*w).second)
                    results.push_back(family_json(
                        *w, "one-axis", Json{{"curve_point", Json::array({to_string(p.X), to_string(p.Y)})}}));
            }
            if (results.empty()) empty_reason = "no quartic points within the height bound";
        } else if (r == make_rat(5, 3)) {
            // Weierstrass route, only available at ratio 5/3
            if (!args.coeffs.empty()) {
                auto ns = parse_coeffs_arg(args.coeffs, 2, "--coeffs");
                const auto& gens = one_axis_generators();
                CurvePoint p = add(one_axis_curve(), scalar_mul(one_axis_curve(), ns[0], gens[0]),
                                   scalar_mul(one_axis_curve(), ns[1], gens[1]));
                if (p.is_infinity()) throw UsageError("--coeffs: the combination is the identity");
                QuarticPoint q = weier_to_quartic_r53(p.x(), p.y());
                push_quartic_point(q.X, q.Y,
                                   Json{{"curve_point", Json::array({to_string(p.x()), to_string(p.y())})}});
            } else if (args.max_coeff > 0) {
                results = stream_family(one_axis_curve(), one_axis_generators(), args.max_coeff,
                                        "one-axis", weier_to_quartic_r53,
                                        [&](const Rat& X, const Rat& Y) { return witness_one_axis(r, X, Y); });
                if (results.empty()) empty_reason = "no verifiable witness in the stream";
            } else {
                throw UsageError("family one-axis requires --point, --coeffs, --max-coeff, or --height-bound");
            }
        } else {
            throw UsageError("family one-axis with --r != 5/3 requires --point or --height-bound");
        }
    } else if (args.family == "symmetric") {
        if (args.multiple != 0) {
            CurvePoint p = scalar_mul(symmetric_curve(), args.multiple, symmetric_generators()[0]);
            QuarticPoint q = weier_to_quartic_sym(p.x(), p.y());
            auto w = witness_symmetric(q.X, q.Y);
            if (w)
                results.push_back(family_json(
                    *w, "symmetric", Json{{"curve_point", Json::array({to_string(p.x()), to_string(p.y())})}}));
            else
                empty_reason = "non-positive ratio";
        } else if (!args.point.empty()) {
            auto [X, Y] = parse_point_arg(args.point, "--point");
            if (!on_quartic(symmetric_quartic(), {X, Y}))
                throw UsageError("--point: not on the symmetric quartic");
            auto w = witness_symmetric(X, Y);
            if (w)
                results.push_back(family_json(*w, "symmetric",
                                              Json{{"curve_point", Json::array({to_string(X), to_string(Y)})}}));
            else
                empty_reason = "non-positive ratio";
        } else if (args.max_coeff > 0) {
            results = stream_family(symmetric_curve(), symmetric_generators(), args.max_coeff,
                                    "symmetric", weier_to_quartic_sym, witness_symmetric);
            if (results.empty()) empty_reason = "no verifiable witness in the stream";
        } else {
            throw UsageError("family symmetric requires --multiple, --point, or --max-coeff");
        }
    } else if (args.family == "general") {
        if (!args.coeffs.empty()) {
            auto ns = parse_coeffs_arg(args.coeffs, 3, "--coeffs");
            const auto& gens = general_generators();
            CurvePoint p = CurvePoint::infinity();
            for (std::size_t i = 0; i < 3; ++i)
                p = add(general_curve(), p, scalar_mul(general_curve(), ns[i], gens[i]));
            if (p.is_infinity()) throw UsageError("--coeffs: the combination is the identity");
            QuarticPoint q = weier_to_quartic_gen(p.x(), p.y());
            auto w = witness_general(q.X, q.Y);
            if (w)
                results.push_back(family_json(
                    *w, "general", Json{{"curve_point", Json::array({to_string(p.x()), to_string(p.y())})}}));
            else
                empty_reason = "non-positive ratio";
        } else if (!args.point.empty()) {
            auto [U, V] = parse_point_arg(args.point, "--point");
            if (!on_quartic(general_quartic(), {U, V}))
                throw UsageError("--point: not on the general quartic");
            auto w = witness_general(U, V);
            if (w)
                results.push_back(family_json(*w, "general",
                                              Json{{"curve_point", Json::array({to_string(U), to_string(V)})}}));
            else
                empty_reason = "non-positive ratio";
        } else if (args.max_coeff > 0) {
            results = stream_family(general_curve(), general_generators(), args.max_coeff, "general",
                                    weier_to_quartic_gen, witness_general);
            if (results.empty()) empty_reason = "no verifiable witness in the stream";
        } else {
            throw UsageError("family general requires --coeffs, --point, or --max-coeff");
        }
    } else {
        throw UsageError("unknown family '" + args.family +
                         "' (expected both-axis, one-axis, symmetric, general)");
    }

    std::string payload;
    if (args.format == "csv") {
        std::string csv = csv_header() + "\n";
        for (const auto& j : results) {
            GPWitness w = witness_from_json(j);
            csv += csv_row(w, "", "") + "\n";
        }
        payload = csv;
    } else {
        Json arr = Json::array();
        for (const auto& j : results) arr.push_back(j);
        payload = arr.dump(2);
    }
    emit(args.out, payload);
    if (results.empty())
        std::cerr << "family " << args.family << ": empty result (" << empty_reason << ")\n";
    else
        std::cerr << "family " << args.family << ": " << results.size() << " witness(es)\n";
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& in_path) {
    std::string text;
    {
        std::ifstream file(in_path);
        if (!file) {
            std::cerr << "verify: cannot open " << in_path << "\n";
            return kExitUsage;
        }
        std::stringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    std::vector<GPWitness> witnesses;
    try {
        witnesses = witnesses_from_json_text(text);
    } catch (const WitnessParseError& e) {
        std::cerr << "verify: malformed input: " << e.what() << "\n";
        return kExitUsage;
    }
    bool all_ok = true;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        bool ok = verify_witness(witnesses[i]);
        all_ok = all_ok && ok;
        std::cout << "witness " << (i + 1) << ": " << (ok ? "ok" : "FAIL") << "\n";
    }
    return all_ok ? kExitOk : kExitDataFailure;
}

// ---------------------------------------------------------------- curve

struct CurveArgs {
    std::string curve = "symmetric";
    std::string point;
    std::string p;
    std::string q;
    std::string n = "1";
    int max_coeff = 1;
    std::string gens;
};

const WeierstrassCurve& named_curve(const std::string& name, std::optional<WeierstrassCurve>& custom) {
    if (name == "one-axis") return one_axis_curve();
    if (name == "symmetric") return symmetric_curve();
    if (name == "general") return general_curve();
    // explicit coefficients "a2,a4,a6"
    std::vector<Rat> coeffs;
    std::stringstream ss(name);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rat_arg(item, "--curve"));
    if (coeffs.size() != 3)
        throw UsageError("--curve: expected one-axis|symmetric|general or 'a2,a4,a6'");
    try {
        custom.emplace(coeffs[0], coeffs[1], coeffs[2]);
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("--curve: ") + e.what());
    }
    return *custom;
}

std::vector<CurvePoint> default_gens(const std::string& name) {
    if (name == "one-axis") return one_axis_generators();
    if (name == "symmetric") return symmetric_generators();
    if (name == "general") return general_generators();
    return {};
}

Json point_json(const CurvePoint& p) {
    if (p.is_infinity()) return Json{{"infinity", true}};
    return Json{{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

int run_curve(const std::string& op, const CurveArgs& args) {
    std::optional<WeierstrassCurve> custom;
    const WeierstrassCurve& curve = named_curve(args.curve, custom);

    if (op == "validate") {
        if (args.point.empty()) throw UsageError("curve validate requires --point");
        auto [x, y] = parse_point_arg(args.point, "--point");
        bool ok = on_curve(curve, CurvePoint(x, y));
        std::cout << point_json(CurvePoint(x, y)).dump() << "\n";
        std::cerr << "curve validate: " << (ok ? "on curve" : "NOT on curve") << "\n";
        return ok ? kExitOk : kExitDataFailure;
    }
    if (op == "add") {
        if (args.p.empty() || args.q.empty()) throw UsageError("curve add requires --p and --q");
        auto [x1, y1] = parse_point_arg(args.p, "--p");
        auto [x2, y2] = parse_point_arg(args.q, "--q");
        try {
            CurvePoint sum = add(curve, CurvePoint(x1, y1), CurvePoint(x2, y2));
            std::cout << point_json(sum).dump() << "\n";
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return kExitOk;
    }
    if (op == "mul") {
        if (args.point.empty()) throw UsageError("curve mul requires --point");
        auto [x, y] = parse_point_arg(args.point, "--point");
        long long n = 0;
        try {
            n = std::stoll(args.n);
        } catch (const std::exception&) {
            throw UsageError("-n: expected an integer");
        }
        try {
            CurvePoint prod = scalar_mul(curve, n, CurvePoint(x, y));
            std::cout << point_json(prod).dump() << "\n";
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return kExitOk;
    }
    if (op == "stream") {
        std::vector<CurvePoint> gens;
        if (!args.gens.empty()) {
            std::stringstream ss(args.gens);
            std::string item;
            while (std::getline(ss, item, ';')) {
                auto [x, y] = parse_point_arg(item, "--gens");
                gens.emplace_back(x, y);
            }
        } else {
            gens = default_gens(args.curve);
        }
        if (gens.empty()) throw UsageError("curve stream: no generators (use --gens x,y;x,y)");
        try {
            Json arr = Json::array();
            for (const auto& p : stream_points(curve, gens, args.max_coeff)) arr.push_back(point_json(p));
            std::cout << arr.dump(2) << "\n";
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return kExitOk;
    }
    throw UsageError("unknown curve operation '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circles with four rational points in geometric progression"};
    app.require_subcommand(1);

    SearchArgs search_args;
    auto* cmd_search = app.add_subcommand("search", "bounded-height triple search");
    cmd_search->add_option("--bound", search_args.bound, "height bound (|p1|+p2+|q1|+q2+r1+r2)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_search->add_option("--shard", search_args.shard, "shard spec INDEX/COUNT");
    cmd_search->add_option("--format", search_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_search->add_option("--out", search_args.out, "output path (default stdout)");
    cmd_search->add_option("--threads", search_args.threads, "worker threads (default: hardware)");

    FamilyArgs family_args;
    auto* cmd_family = app.add_subcommand("family", "closed-form and curve-derived progressions");
    cmd_family->add_option("family", family_args.family, "both-axis | one-axis | symmetric | general")
        ->required();
    cmd_family->add_option("--t", family_args.t, "parameter for both-axis");
    cmd_family->add_option("--r", family_args.r, "ratio for one-axis (default 5/3)");
    cmd_family->add_option("--point", family_args.point, "quartic point X,Y");
    cmd_family->add_option("--coeffs", family_args.coeffs, "generator coefficients n1,n2[,n3]");
    cmd_family->add_option("--multiple", family_args.multiple, "generator multiple (symmetric)");
    cmd_family->add_option("--max-coeff", family_args.max_coeff, "stream all |n_i| <= bound");
    cmd_family->add_option("--height-bound", family_args.height_bound,
                           "quartic point search bound (one-axis)");
    cmd_family->add_option("--format", family_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_family->add_option("--out", family_args.out, "output path (default stdout)");

    std::string verify_in;
    auto* cmd_verify = app.add_subcommand("verify", "certify witnesses from a JSON file");
    cmd_verify->add_option("--in,in", verify_in, "witness file (object or array)")->required();

    CurveArgs curve_args;
    std::string curve_op;
    auto* cmd_curve = app.add_subcommand("curve", "elliptic-curve point utilities");
    cmd_curve->add_option("op", curve_op, "validate | add | mul | stream")->required();
    cmd_curve->add_option("--curve", curve_args.curve, "one-axis | symmetric | general | a2,a4,a6");
    cmd_curve->add_option("--point", curve_args.point, "point x,y");
    cmd_curve->add_option("--p", curve_args.p, "first addend x,y");
    cmd_curve->add_option("--q", curve_args.q, "second addend x,y");
    cmd_curve->add_option("-n", curve_args.n, "scalar");
    cmd_curve->add_option("--max-coeff", curve_args.max_coeff, "stream coefficient bound");
    cmd_curve->add_option("--gens", curve_args.gens, "generators x,y;x,y (default: curve's own)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_search->parsed()) return run_search(search_args);
        if (cmd_family->parsed()) return run_family(family_args);
        if (cmd_verify->parsed()) return run_verify(verify_in);
        if (cmd_curve->parsed()) return run_curve(curve_op, curve_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ExcludedLocus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataFailure;
    }
    return kExitUsage;
}
