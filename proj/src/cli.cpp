#include "cpt/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cpt/parallel.hpp"
#include "cpt/random.hpp"
#include "cpt/serialize.hpp"
#include "cpt/verification.hpp"

namespace cpt::cli {

namespace {

struct Outcome
{
    std::vector<Json> lines;
    bool falsified = false;
};

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try
    {
        return Json::parse(in);
    }
    catch (const Json::parse_error& e)
    {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void require(bool condition, const std::string& message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

// Seeded configurations are drawn one after another from a single generator,
// so they do not depend on how the trials are scheduled later.
std::vector<PointConfig> configurations(const RunConfig& c, int n)
{
    if (!c.input.empty())
        return {config_from_json(read_json(c.input))};
    require(c.d >= 1, "--d must be at least 1");
    require(c.trials >= 1, "--trials must be at least 1");
    RationalSampler rng(c.seed);
    std::vector<PointConfig> out;
    for (int t = 0; t < c.trials; ++t)
        out.emplace_back(c.d, rng.points(n, c.d));
    return out;
}

template <typename Trial>
Outcome run_trials(const RunConfig& c, const std::vector<PointConfig>& configs, Trial&& trial)
{
    Outcome out;
    out.lines = parallel_map<Json>(configs.size(), c.jobs, [&](std::size_t i) {
        Json line{{"trial", i}, {"config", config_to_json(configs[i])}};
        try
        {
            trial(configs[i], line);
        }
        catch (const VerificationFailure& e)
        {
            line["pass"] = false;
            line["failure"] = e.what();
        }
        return line;
    });
    int passed = 0;
    for (const auto& line : out.lines)
        passed += line.value("pass", false) ? 1 : 0;
    out.falsified = passed != static_cast<int>(out.lines.size());
    out.lines.push_back(Json{{"summary", c.subcommand}, {"trials", configs.size()}, {"passed", passed}});
    return out;
}

int resolve_d(const RunConfig& c, const std::vector<PointConfig>& configs)
{
    return configs.empty() ? c.d : configs.front().d;
}

Outcome centerpoint_cmd(const RunConfig& c)
{
    require(c.r >= 1, "--r must be at least 1");
    const auto configs = configurations(c, (std::max(c.d, 1) + 1) * (c.r - 1) + 1);
    return run_trials(c, configs, [&](const PointConfig& X, Json& line) {
        const auto cert = centerpoint(X, c.r);
        line["found"] = cert.has_value();
        if (cert)
            line["certificate"] = to_json(*cert);
        line["pass"] = cert && cert->depth >= c.r;
    });
}

Outcome tverberg_cmd(const RunConfig& c)
{
    require(c.r >= 1, "--r must be at least 1");
    const auto configs = configurations(c, (std::max(c.d, 1) + 1) * (c.r - 1) + 1);
    return run_trials(c, configs, [&](const PointConfig& X, Json& line) {
        const auto cert = tverberg_partition(X, c.r);
        const bool guaranteed = X.size() >= (X.d + 1) * (c.r - 1) + 1;
        line["found"] = cert.has_value();
        if (!cert)
        {
            line["pass"] = !guaranteed;
            return;
        }
        const int depth = tukey_depth(cert->x, X).depth;
        line["partition"] = to_json(*cert);
        line["depth"] = depth;
        line["pass"] = verify_tverberg(*cert, X) && depth >= c.r;
    });
}

Outcome reduce_cmd(const RunConfig& c)
{
    require(c.r >= 2, "--r must be at least 2");
    const auto configs = configurations(c, (std::max(c.d, 1) + 1) * (c.r - 1) + 1);
    const int d = resolve_d(c, configs);
    const int q = d * (c.r - 1) + 1;
    return run_trials(c, configs, [&](const PointConfig& X, Json& line) {
        const auto result = reduce_central_from_tverberg(X, c.r);
        line["reduction"] = to_json(result);
        line["hull_q"] = q;
        line["pass"] = plan_identities_hold(result.plan) && result.depth.depth >= c.r;
    });
}

Outcome hind_cmd(const RunConfig& c)
{
    Z2Complex X;
    if (!c.input.empty())
        X = z2_from_json(read_json(c.input));
    else
    {
        require(c.sphere >= 0, "hind needs --sphere m or --input");
        X = cross_polytope_sphere(c.sphere);
    }
    return {{Json{{"hind", hind(X)}}}, false};
}

Outcome counterexample_cmd(const RunConfig& c)
{
    require(c.d >= 1 && c.r >= 2, "counterexample needs --d >= 1 and --r >= 2");
    const int m = (c.d + 1) * c.r - 2;
    require(c.m < 0 || c.m == m, "--m must equal (d+1)r-2 = " + std::to_string(m));
    const auto report = verify_isolation(build_counterexample(c.d, c.r), c.jobs);
    Outcome out;
    for (const auto& row : report.tuples)
        out.lines.push_back(to_json(row));
    out.lines.push_back(Json{{"summary", "counterexample"},
                             {"d", c.d},
                             {"r", c.r},
                             {"m", m},
                             {"tuples", report.tuples.size()},
                             {"pass", true}});
    return out;
}

Outcome probe_cmd(const RunConfig& c)
{
    require(c.d >= 1 && c.r >= 2, "probe needs --d >= 1 and --r >= 2");
    const int m = (c.d + 1) * c.r - 1;
    require(c.m < 0 || c.m == m, "--m must equal (d+1)r-1 = " + std::to_string(m));
    const auto result = probe_tverberg_plus_one(c.d, c.r);
    Json line = to_json(result);
    const bool asserted = is_prime_power(c.r);
    line["prime_power"] = asserted;
    return {{line}, asserted && !result.witness};
}

std::vector<Point> random_facet_touching(int n, RationalSampler& rng)
{
    auto draw = [&](int zero_at) {
        Point w(n + 1);
        Rational sum = 0;
        for (int i = 0; i <= n; ++i)
        {
            w(i) = i == zero_at ? Rational(0) : Rational(rng.uniform_int(0, 6));
            sum += w(i);
        }
        if (sum == 0)
        {
            w((zero_at + 1) % (n + 1)) = 1;
            sum = 1;
        }
        return Point(w / sum);
    };
    std::vector<Point> S;
    for (int i = 0; i <= n; ++i)
        S.push_back(draw(i));
    const auto extra = rng.uniform_int(0, 3);
    for (int j = 0; j < extra; ++j)
        S.push_back(draw(-1));
    return S;
}

Outcome cover_cmd(const RunConfig& c)
{
    Outcome out;
    if (!c.input.empty())
    {
        const Json j = read_json(c.input);
        require(j.contains("points") && j["points"].is_array(), "cover input needs \"points\"");
        std::vector<Point> S;
        for (const auto& p : j["points"])
            S.push_back(point_from_json(p));
        Json line{{"points", j["points"]}};
        if (j.contains("body"))
        {
            line["cover"] = to_json(min_cover_homothety(S, body_from_json(j["body"])));
            line["pass"] = true;
        }
        else
        {
            const auto r = facet_touching_check(S);
            line["touches"] = r.touches;
            line["cover"] = to_json(r.cover);
            line["pass"] = !r.touches || r.cover.delta >= 1;
        }
        out.falsified = !line["pass"].get<bool>();
        out.lines.push_back(line);
        return out;
    }

    require(c.d >= 1, "--d (simplex dimension) must be at least 1");
    require(c.trials >= 1, "--trials must be at least 1");
    RationalSampler rng(c.seed);
    std::vector<std::vector<Point> > sets;
    for (int t = 0; t < c.trials; ++t)
        sets.push_back(random_facet_touching(c.d, rng));
    out.lines = parallel_map<Json>(sets.size(), c.jobs, [&](std::size_t i) {
        Json pts = Json::array();
        for (const auto& p : sets[i])
            pts.push_back(point_to_json(p));
        Json line{{"trial", i}, {"points", pts}};
        try
        {
            const auto r = facet_touching_check(sets[i]);
            line["touches"] = r.touches;
            line["cover"] = to_json(r.cover);
            line["pass"] = r.touches && r.cover.delta >= 1;
        }
        catch (const VerificationFailure& e)
        {
            line["pass"] = false;
            line["failure"] = e.what();
        }
        return line;
    });
    int passed = 0;
    for (const auto& line : out.lines)
        passed += line["pass"].get<bool>() ? 1 : 0;
    out.falsified = passed != c.trials;
    out.lines.push_back(Json{{"summary", "cover"}, {"trials", c.trials}, {"passed", passed}});
    return out;
}

Outcome fiber_demo_cmd(const RunConfig& c)
{
    require(c.density >= 1, "--density must be positive");
    PLMapSpec f;
    Realization line_target;
    line_target.ambient_dim = 1;
    if (c.map == "projection" || c.map == "constant")
    {
        const int n = c.d >= 1 ? c.d : 2;
        std::vector<Point> images(n + 1, Point::Zero(1));
        if (c.map == "projection")
        {
            images[0](0) = 1;
            line_target.points = {{0, Point::Zero(1)}, {1, Point::Ones(1)}};
            f = affine_pl_map(n, images, SimplicialComplex({Simplex{0, 1}}), line_target);
        }
        else
        {
            line_target.points = {{0, Point::Zero(1)}};
            f = affine_pl_map(n, images, SimplicialComplex({Simplex{0}}), line_target);
        }
    }
    else if (c.map == "cone")
    {
        require(c.d >= 1 && c.r >= 2, "the cone map needs --d >= 1 and --r >= 2");
        f = build_counterexample(c.d, c.r).f;
    }
    else
        throw std::invalid_argument("--map must be projection, constant or cone");

    const auto report = fiber_width_demo(f, c.density, c.jobs);
    Outcome out;
    for (const auto& cell : report.cells)
        out.lines.push_back(to_json(cell));
    out.lines.push_back(Json{{"summary", "fiber-demo"},
                             {"label", "evidence"},
                             {"map", c.map},
                             {"n", report.n},
                             {"k", report.k},
                             {"density", report.density},
                             {"cells", report.cells.size()},
                             {"max_delta", to_string(report.max_delta)}});
    return out;
}

const std::map<std::string, std::function<Outcome(const RunConfig&)> >& commands()
{
    static const std::map<std::string, std::function<Outcome(const RunConfig&)> > table{
        {"centerpoint", centerpoint_cmd},
        {"tverberg", tverberg_cmd},
        {"reduce", reduce_cmd},
        {"hind", hind_cmd},
        {"counterexample", counterexample_cmd},
        {"probe", probe_cmd},
        {"cover", cover_cmd},
        {"fiber-demo", fiber_demo_cmd},
    };
    return table;
}

}   // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto& table = commands();
    const auto it = table.find(config.subcommand);
    if (it == table.end())
    {
        err << "unknown subcommand: " << config.subcommand << "\n";
        return usage;
    }
    if (config.jobs < 1)
    {
        err << "--jobs must be at least 1\n";
        return usage;
    }

    Outcome outcome;
    try
    {
        outcome = it->second(config);
    }
    catch (const VerificationFailure& e)
    {
        outcome.lines.push_back(Json{{"verification_failure", e.what()}, {"witness", Json::parse(e.witness(), nullptr, false)}});
        outcome.falsified = true;
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const std::domain_error& e)
    {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty())
    {
        file.open(config.output);
        if (!file)
        {
            err << "error: cannot write " << config.output << "\n";
            return usage;
        }
        sink = &file;
    }
    for (const auto& line : outcome.lines)
        *sink << line.dump() << "\n";
    sink->flush();
    if (config.verbose)
        err << config.subcommand << ": " << (outcome.falsified ? "FALSIFIED" : "ok") << "\n";
    return outcome.falsified ? falsified : pass;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of central point, Tverberg, index and waist statements"};
    app.require_subcommand(1);
    RunConfig config;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", config.seed, "seed of the random generator");
        sub->add_option("--trials", config.trials, "number of seeded instances");
        sub->add_option("--input", config.input, "read the instance from a JSON file");
        sub->add_option("--output", config.output, "write JSON lines to a file instead of stdout");
        sub->add_option("--jobs", config.jobs, "worker threads");
        sub->add_flag("--verbose,-v", config.verbose, "status line on stderr");
    };
    auto geometry = [&](CLI::App* sub) {
        sub->add_option("--d", config.d, "ambient dimension");
        sub->add_option("--r", config.r, "number of parts / depth");
        sub->add_option("--m", config.m, "simplex dimension, checked against d and r");
    };

    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string> >{
             {"centerpoint", "centerpoints of seeded configurations with depth certificates"},
             {"tverberg", "Tverberg partitions with exact common points"},
             {"reduce", "central point from a Tverberg partition of the lifted configuration"},
             {"counterexample", "isolation check of the cone-over-skeleton map at m = (d+1)r-2"},
             {"probe", "common image point of disjoint faces at m = (d+1)r-1"}})
    {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        geometry(sub);
    }
    {
        CLI::App* sub = app.add_subcommand("hind", "homological index of a free Z2-complex");
        common(sub);
        sub->add_option("--sphere", config.sphere, "boundary of the (m+1)-dimensional cross-polytope");
    }
    {
        CLI::App* sub = app.add_subcommand("cover", "smallest covering homothety; facet-touching sets in the d-simplex");
        common(sub);
        geometry(sub);
    }
    {
        CLI::App* sub = app.add_subcommand("fiber-demo", "sampled fiber widths of a PL map from the simplex (evidence)");
        common(sub);
        geometry(sub);
        sub->add_option("--density", config.density, "grid denominator");
        sub->add_option("--map", config.map, "projection, constant or cone");
    }

    std::vector<std::string> storage{"cptk"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? pass : usage;
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    return run(config, out, err);
}

}   // namespace cpt::cli
