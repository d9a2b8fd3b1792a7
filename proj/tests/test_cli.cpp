#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cpt/cli.hpp"
#include "cpt/serialize.hpp"

namespace {

struct Run
{
    int code = -1;
    std::string out;
    std::string err;
};

Run cptk(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    Run r;
    r.code = cpt::cli::main(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<cpt::Json> lines(const std::string& text)
{
    std::vector<cpt::Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(cpt::Json::parse(line));
    return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}

}   // namespace

TEST_CASE("hind on spheres", "[cli]")
{
    for (int m = 0; m <= 2; ++m)
    {
        const auto r = cptk({"hind", "--sphere", std::to_string(m)});
        CHECK(r.code == 0);
        CHECK(r.out == "{\"hind\":" + std::to_string(m) + "}\n");
    }
}

TEST_CASE("hind reads a complex", "[cli]")
{
    const auto circle = temp_file("cptk_circle.json", R"({"facets":[[0,2],[2,1],[1,3],[3,0]],"involution":[1,0,3,2]})");
    const auto r = cptk({"hind", "--input", circle.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"hind\":1}\n");

    const auto fixed = temp_file("cptk_fixed.json", R"({"facets":[[0,1]],"involution":[1,0]})");
    const auto bad = cptk({"hind", "--input", fixed.string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("fixed simplex") != std::string::npos);
}

TEST_CASE("usage errors exit with 2", "[cli]")
{
    CHECK(cptk({}).code == 2);
    CHECK(cptk({"nonsense"}).code == 2);
    CHECK(cptk({"centerpoint", "--d", "x"}).code == 2);
    CHECK(cptk({"centerpoint", "--d", "0", "--r", "2"}).code == 2);
    CHECK(cptk({"centerpoint", "--d", "2", "--r", "2", "--jobs", "0"}).code == 2);
    CHECK(cptk({"counterexample", "--d", "1", "--r", "2", "--m", "3"}).code == 2);
    CHECK(cptk({"probe", "--d", "1", "--r", "2", "--m", "2"}).code == 2);
    CHECK(cptk({"hind"}).code == 2);
    CHECK(cptk({"fiber-demo", "--map", "spiral"}).code == 2);
    CHECK(cptk({"centerpoint", "--d", "1", "--r", "2", "--input", "/nonexistent/file.json"}).code == 2);
    CHECK(cptk({"--help"}).code == 0);
}

TEST_CASE("centerpoint trials", "[cli]")
{
    const auto r = cptk({"centerpoint", "--d", "2", "--r", "2", "--trials", "4", "--seed", "11"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    for (int t = 0; t < 4; ++t)
    {
        CHECK(rows[t]["trial"] == t);
        CHECK(rows[t]["pass"] == true);
        CHECK(rows[t]["config"]["points"].size() == 4);
        CHECK(rows[t]["certificate"]["depth"].get<int>() >= 2);
    }
    CHECK(rows[4]["passed"] == 4);
}

TEST_CASE("a configuration that is too small has no deep point", "[cli]")
{
    const auto input = temp_file("cptk_small.json", R"({"d":1,"points":["0","1"]})");
    // Points are arrays of coordinates; bare strings are rejected.
    CHECK(cptk({"centerpoint", "--r", "2", "--input", input.string()}).code == 2);

    const auto ok = temp_file("cptk_small2.json", R"({"d":1,"points":[["0"],["1"]]})");
    const auto r = cptk({"centerpoint", "--r", "2", "--input", ok.string()});
    CHECK(r.code == 1);
    const auto rows = lines(r.out);
    CHECK(rows[0]["found"] == false);
    CHECK(rows[0]["pass"] == false);
    CHECK(rows[0]["config"]["points"].size() == 2);

    // The Tverberg search may legitimately come back empty below the bound.
    CHECK(cptk({"tverberg", "--r", "2", "--input", ok.string()}).code == 0);
}

TEST_CASE("tverberg and reduce", "[cli]")
{
    const auto t = cptk({"tverberg", "--d", "1", "--r", "3", "--trials", "3"});
    REQUIRE(t.code == 0);
    for (const auto& row : lines(t.out))
        if (row.contains("trial"))
            CHECK(row["partition"]["blocks"].size() == 3);

    const auto r = cptk({"reduce", "--d", "1", "--r", "4", "--trials", "2"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0]["reduction"]["plan"]["M"] == 13);
    CHECK(rows[0]["hull_q"] == 4);
    CHECK(cptk({"reduce", "--d", "1", "--r", "1"}).code == 2);
}

TEST_CASE("counterexample and probe", "[cli]")
{
    const auto c = cptk({"counterexample", "--d", "1", "--r", "2"});
    REQUIRE(c.code == 0);
    const auto rows = lines(c.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows.back()["tuples"] == 6);
    CHECK(rows[0]["digest"].get<std::string>().size() == 16);

    const auto p = cptk({"probe", "--d", "1", "--r", "2", "--m", "3"});
    CHECK(p.code == 0);
    const auto probe = lines(p.out).front();
    CHECK(probe["found"] == true);
    CHECK(probe["point"] == cpt::Json::array({"1/4", "1/4", "1/4", "1/4"}));
}

TEST_CASE("cover", "[cli]")
{
    const auto r = cptk({"cover", "--d", "3", "--trials", "5"});
    REQUIRE(r.code == 0);
    for (const auto& row : lines(r.out))
        if (row.contains("trial"))
        {
            CHECK(row["touches"] == true);
            CHECK(cpt::parse_rational(row["cover"]["delta"].get<std::string>()) >= 1);
        }

    const auto square = temp_file("cptk_square.json",
                                  R"({"points":[["1","1"],["0","0"]],"body":{"A":[[1,0],[-1,0],[0,1],[0,-1]],"b":[1,1,1,1]}})");
    const auto s = cptk({"cover", "--input", square.string()});
    REQUIRE(s.code == 0);
    CHECK(lines(s.out)[0]["cover"]["delta"] == "1/2");

    const auto outside = temp_file("cptk_outside.json", R"({"points":[["2","-1"]]})");
    CHECK(cptk({"cover", "--input", outside.string()}).code == 2);
}

TEST_CASE("fiber demo", "[cli]")
{
    const auto r = cptk({"fiber-demo", "--map", "projection", "--d", "2", "--density", "3"});
    REQUIRE(r.code == 0);
    const auto summary = lines(r.out).back();
    CHECK(summary["label"] == "evidence");
    CHECK(summary["n"] == 2);
    CHECK(summary["k"] == 1);

    const auto constant = cptk({"fiber-demo", "--map", "constant", "--d", "2", "--density", "2"});
    REQUIRE(constant.code == 0);
    const auto rows = lines(constant.out);
    CHECK(rows.size() == 2);
    CHECK(rows.back()["max_delta"] == "1");
}

TEST_CASE("output file", "[cli]")
{
    const auto path = std::filesystem::temp_directory_path() / "cptk_output.jsonl";
    std::filesystem::remove(path);
    const auto r = cptk({"hind", "--sphere", "1", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "{\"hind\":1}\n");
}

TEST_CASE("output does not depend on --jobs", "[cli]")
{
    const std::vector<std::vector<std::string> > commands{
        {"centerpoint", "--d", "2", "--r", "2", "--trials", "5", "--seed", "3"},
        {"tverberg", "--d", "1", "--r", "3", "--trials", "5", "--seed", "3"},
        {"reduce", "--d", "1", "--r", "4", "--trials", "3", "--seed", "3"},
        {"counterexample", "--d", "1", "--r", "3"},
        {"cover", "--d", "2", "--trials", "6", "--seed", "3"},
        {"fiber-demo", "--map", "cone", "--d", "1", "--r", "2", "--density", "3"},
    };
    for (const auto& args : commands)
    {
        auto one = args;
        one.insert(one.end(), {"--jobs", "1"});
        auto three = args;
        three.insert(three.end(), {"--jobs", "3"});
        const auto a = cptk(one);
        const auto b = cptk(three);
        INFO(args.front());
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
