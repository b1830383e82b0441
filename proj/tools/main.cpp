// mirrorkit command line: period series, operator fitting and verification,
// intersection tables, genus-0 invariants from both pipelines, and the
// reproduction harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <mirrorkit/acceptance.hpp>
#include <mirrorkit/cache.hpp>
#include <mirrorkit/series_io.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace mirrorkit;

namespace {

void write_output(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

TruncatedSeries make_period(const std::string& family, int cap)
{
    if (family == "x0") return period_x0(cap);
    if (family == "x1") return period_x1(cap);
    if (family == "x1-lcs010") return period_x1_lcs010(cap);
    throw CLI::ValidationError("--family", "unknown family " + family);
}

json bps_json(const BPSTable& n)
{
    json out = json::object();
    for (const auto& [m, v] : n) {
        std::string key;
        for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
        out[key] = v.str();
    }
    return out;
}

json gw_json(const GWTable& n)
{
    json out = json::object();
    for (const auto& [m, v] : n) {
        std::string key;
        for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
        out[key] = to_string(v);
    }
    return out;
}

/// CSV in the published layout: rows d1 = 0..10, columns d2 = 0..5 (cells
/// beyond the computed range stay empty).
std::string bps_csv(const BPSTable& n, int max_total)
{
    std::ostringstream os;
    os << "d1\\d2";
    for (int d2 = 0; d2 <= 5; ++d2) os << "," << d2;
    os << "\n";
    for (int d1 = 0; d1 <= std::min(10, max_total); ++d1) {
        os << d1;
        for (int d2 = 0; d2 <= 5; ++d2) {
            os << ",";
            if (d1 + d2 > max_total) continue;
            auto it = n.find(Mono{d1, d2});
            os << (it == n.end() ? Integer(0) : it->second).str();
        }
        os << "\n";
    }
    return os.str();
}

json poly_json(const Poly& p)
{
    json out = json::object();
    for (const auto& [m, c] : p) {
        std::string key;
        for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
        out[key] = to_string(c);
    }
    return out;
}

SurfaceSpec surface_from_arg(const std::string& arg)
{
    if (arg.size() >= 5 && arg.substr(arg.size() - 5) == ".json") {
        json j = json::parse(slurp(arg));
        SurfaceSpec s;
        s.name = j.at("name").get<std::string>();
        for (const auto& f : j.at("fibers")) {
            std::string kind = f.at("kind").get<std::string>();
            KodairaFiber fib;
            if (kind == "II")
                fib = KodairaFiber::II();
            else if (kind == "I" || kind == "In")
                fib = KodairaFiber::In(f.at("b").get<int>());
            else
                throw std::runtime_error("unknown fiber kind '" + kind + "' (use \"I\" or \"II\")");
            s.fibers.push_back({f.at("point").get<std::string>(), fib});
        }
        return s;
    }
    return surface_by_name(arg);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic toolkit for the join Calabi-Yau families: periods, "
                 "Picard-Fuchs operators, genus-0 invariants, Schoen invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir = ArtifactCache::default_dir().string();
    app.add_option("--cache-dir", cache_dir, "cache directory (or set MIRRORKIT_CACHE)");

    // ---- periods ----
    auto* cmd_periods = app.add_subcommand("periods", "emit a holomorphic period series");
    std::string family = "x1", out_path;
    int cap = 12;
    cmd_periods->add_option("--family", family, "x0 | x1 | x1-lcs010")->required();
    cmd_periods->add_option("--cap", cap, "total-degree bound")->check(CLI::NonNegativeNumber);
    cmd_periods->add_option("--out", out_path, "output file (default stdout)");
    bool use_cache = false;
    cmd_periods->add_flag("--cached", use_cache, "read/write the artifact cache");
    cmd_periods->callback([&] {
        TruncatedSeries s = use_cache
                                ? ArtifactCache(cache_dir).series(
                                      "period-" + family, family + ":" + std::to_string(cap),
                                      [&] { return make_period(family, cap); })
                                : make_period(family, cap);
        write_output(series_to_string(s), out_path);
    });

    // ---- fit ----
    auto* cmd_fit = app.add_subcommand("fit", "fit annihilating operators of a given shape");
    std::string series_path, op_out;
    int theta_deg = 2, coeff_deg = 2;
    cmd_fit->add_option("--series", series_path, "series file")->required();
    cmd_fit->add_option("--theta-deg", theta_deg, "theta-degree bound")->required();
    cmd_fit->add_option("--coeff-deg", coeff_deg, "coefficient-degree bound")->required();
    cmd_fit->add_option("--out", op_out, "output file (default stdout)");
    cmd_fit->callback([&] {
        std::istringstream is(slurp(series_path));
        auto s = read_series(is);
        auto ops = fit_operator(s, theta_deg, coeff_deg);
        std::ostringstream os;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (i) os << "---\n";
            os << ops[i].to_string();
        }
        write_output(os.str(), op_out);
        std::cerr << "nullspace dimension " << ops.size() << "\n";
    });

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "check that an operator annihilates a series");
    std::string op_path, vseries_path;
    int through = -1;
    cmd_verify->add_option("--op", op_path, "operator file")->required();
    cmd_verify->add_option("--series", vseries_path, "series file")->required();
    cmd_verify->add_option("--through", through, "verified total degree (default: series cap)");
    cmd_verify->callback([&] {
        std::istringstream is(slurp(vseries_path));
        auto s = read_series(is);
        auto op = ThetaOperator::from_string(slurp(op_path), s.vars());
        int deg = through < 0 ? s.cap() : through;
        auto res = annihilates(op, s, deg);
        if (res.annihilates) {
            std::cout << "annihilates through total degree " << res.verified_degree << "\n";
        } else {
            std::cout << "FAILS at (";
            for (std::size_t i = 0; i < res.first_failure->size(); ++i)
                std::cout << (i ? "," : "") << (*res.first_failure)[i];
            std::cout << ") with value " << to_string(res.failing_value) << "\n";
            throw CLI::RuntimeError(1);
        }
    });

    // ---- intersections ----
    auto* cmd_inter = app.add_subcommand("intersections",
                                         "classical triple intersection tables as JSON");
    std::string inter_out;
    cmd_inter->add_option("--out", inter_out, "output file (default stdout)");
    cmd_inter->callback([&] {
        AmbientX1 x1;
        AmbientY1 y1;
        AmbientX0 x0;
        auto k1 = x1.kappa();
        auto ky = y1.kappa();
        json j;
        j["X1"] = {{"basis", {"D1", "D2"}},
                   {"kappa", {{"111", to_string(k1(0, 0, 0))},
                              {"112", to_string(k1(0, 0, 1))},
                              {"122", to_string(k1(0, 1, 1))},
                              {"222", to_string(k1(1, 1, 1))}}}};
        j["Y1"] = {{"basis", {"L'", "D'"}},
                   {"kappa", {{"111", to_string(ky(0, 0, 0))},
                              {"112", to_string(ky(0, 0, 1))},
                              {"122", to_string(ky(0, 1, 1))},
                              {"222", to_string(ky(1, 1, 1))}}}};
        j["X0"] = {{"basis", {"D"}}, {"kappa", {{"111", to_string(x0.kappa())}}}};
        write_output(j.dump(2) + "\n", inter_out);
    });

    // ---- gw ----
    auto* cmd_gw = app.add_subcommand("gw", "A-model genus-0 invariants via the I-function");
    std::string model = "x1", gw_out, gw_format = "json";
    int max_degree = 6;
    cmd_gw->add_option("--model", model, "x0 | x1")->required();
    cmd_gw->add_option("--max-degree", max_degree, "largest total curve degree");
    cmd_gw->add_option("--format", gw_format, "json | csv");
    cmd_gw->add_option("--out", gw_out, "output file (default stdout)");
    cmd_gw->callback([&] {
        AModelResult res;
        if (model == "x1") {
            AmbientX1 amb;
            res = amodel_x1(amb, max_degree + 1);
        } else if (model == "x0") {
            AmbientX0 amb;
            res = amodel_x0(amb, max_degree + 1);
        } else
            throw CLI::ValidationError("--model", "unknown model " + model);
        GWTable gw;
        BPSTable bps;
        for (const auto& [m, v] : res.gw)
            if (total_degree(m) <= max_degree) gw[m] = v;
        for (const auto& [m, v] : res.bps)
            if (total_degree(m) <= max_degree) bps[m] = v;
        if (gw_format == "csv" && model == "x1") {
            write_output(bps_csv(bps, max_degree), gw_out);
        } else {
            json j;
            j["model"] = model;
            j["max_degree"] = max_degree;
            j["gw"] = gw_json(gw);
            j["bps"] = bps_json(bps);
            write_output(j.dump(2) + "\n", gw_out);
        }
    });

    // ---- bmodel ----
    auto* cmd_bm = app.add_subcommand("bmodel", "B-model pipeline at a large complex structure chart");
    std::string chart_name = "100", emit = "bps", bm_out, bm_format = "json";
    int bm_cap = 8;
    cmd_bm->add_option("--chart", chart_name, "100 | 010 | 001")->required();
    cmd_bm->add_option("--cap", bm_cap, "series truncation degree");
    cmd_bm->add_option("--emit", emit, "periods | mirror-map | yukawa | bps");
    cmd_bm->add_option("--format", bm_format, "json | csv (bps only)");
    cmd_bm->add_option("--out", bm_out, "output file (default stdout)");
    cmd_bm->callback([&] {
        if (bm_cap < 8) throw CLI::ValidationError("--cap", "need cap >= 8 for the rational Yukawa fit");
        AmbientX1 amb;
        auto kappa = amb.kappa();
        auto run100 = bmodel_chart(chart_100(), bm_cap, kappa, 5);
        BModelRun run = run100.chart == chart_name
                            ? std::move(run100)
                            : bmodel_chart_transported(run100, chart_100(), chart_by_name(chart_name),
                                                       bm_cap, 5);
        json meta;
        meta["chart"] = run.chart;
        meta["cap"] = bm_cap;
        meta["via_transport"] = run.via_transport;
        meta["yukawa_fallback_used"] = run.rational.fallback_used;
        meta["yukawa_validated_degree"] = run.rational.validated_degree;
        meta["log_solution_dimension"] = run.solution_dimension;
        meta["log_solution_dimension_expected_rank"] = 6;
        json j;
        j["meta"] = meta;
        if (emit == "periods") {
            j["omega0"] = series_to_string(run.frob.omega0);
            for (std::size_t a = 0; a < run.frob.single_log.size(); ++a)
                j["single_log_" + std::to_string(a)] = series_to_string(run.frob.single_log[a]);
        } else if (emit == "mirror-map") {
            for (std::size_t a = 0; a < run.mm.tau.size(); ++a) {
                j["tau_" + std::to_string(a)] = series_to_string(run.mm.tau[a]);
                j["inverse_" + std::to_string(a)] = series_to_string(run.mm.z_of_q[a]);
            }
        } else if (emit == "yukawa") {
            json ys;
            const char* names[4] = {"C111", "C112", "C122", "C222"};
            for (int t = 0; t <= 3; ++t) ys[names[t]] = poly_json(run.rational.num[t]);
            ys["denominator"] = poly_json(run.rational.den);
            for (int t = 0; t <= 3; ++t)
                ys[std::string("kappa_") + names[t]] = to_string(run.kappa.k[t]);
            j["yukawa"] = ys;
        } else if (emit == "bps") {
            if (bm_format == "csv") {
                write_output(bps_csv(run.q.bps, bm_cap - 2), bm_out);
                return;
            }
            j["gw"] = gw_json(run.q.gw);
            j["bps"] = bps_json(run.q.bps);
        } else
            throw CLI::ValidationError("--emit", "unknown artifact " + emit);
        write_output(j.dump(2) + "\n", bm_out);
    });

    // ---- hodge ----
    auto* cmd_hodge = app.add_subcommand("hodge", "Schoen invariants of a fiber product");
    std::string s1_arg, s2_arg, hodge_out;
    int isogeny = 0;
    cmd_hodge->add_option("--s1", s1_arg, "surface spec: JSON file or builtin name (T0bar,T0,T1,T2,T3)")
        ->required();
    cmd_hodge->add_option("--s2", s2_arg, "surface spec: JSON file or builtin name")->required();
    cmd_hodge->add_option("--d", isogeny, "isogeny flag (0 or 1)")->check(CLI::Range(0, 1));
    cmd_hodge->add_option("--out", hodge_out, "output file (default stdout)");
    cmd_hodge->callback([&] {
        FiberProductSpec spec{surface_from_arg(s1_arg), surface_from_arg(s2_arg)};
        auto hp = hodge_pair(spec, isogeny);
        json j;
        j["s1"] = spec.s1.name;
        j["s2"] = spec.s2.name;
        j["shared_points"] = spec.shared_points();
        j["euler_fiber_product"] = euler_fiber_product(spec);
        j["nodes"] = node_count(spec);
        j["euler_resolved"] = euler_resolved(spec);
        j["isogeny_flag"] = isogeny;
        j["h11"] = hp.first;
        j["h21"] = hp.second;
        write_output(j.dump(2) + "\n", hodge_out);
    });

    // ---- reproduce ----
    auto* cmd_rep = app.add_subcommand("reproduce",
                                       "regenerate every anchored number and report pass/fail");
    bool quiet = false;
    cmd_rep->add_flag("--quiet", quiet, "suppress progress notes");
    cmd_rep->callback([&] {
        auto rep = run_acceptance(quiet ? nullptr : &std::cerr);
        for (const auto& r : rep.results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.description << "\n";
            if (!r.details.empty()) std::cout << "      " << r.details << "\n";
        }
        if (!rep.all_pass()) throw CLI::RuntimeError(1);
    });

    // ---- cache ----
    auto* cmd_cache = app.add_subcommand("cache", "warm the artifact cache with the period series");
    int warm_cap = 12;
    cmd_cache->add_option("--cap", warm_cap, "cap for the warmed series");
    cmd_cache->callback([&] {
        ArtifactCache cache(cache_dir);
        int hits = 0, total = 0;
        for (const std::string fam : {"x0", "x1", "x1-lcs010"}) {
            bool hit = false;
            cache.series("period-" + fam, fam + ":" + std::to_string(warm_cap),
                         [&] { return make_period(fam, warm_cap); }, &hit);
            ++total;
            hits += hit ? 1 : 0;
        }
        std::cout << "cache dir " << cache.dir().string() << ": " << total << " entries, " << hits
                  << " hits\n";
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
