#include <catch_amalgamated.hpp>

#include "qpoly_cli.hpp"

#include <cstdio>

using namespace qpoly;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

io::Json run_json(std::vector<std::string> args, const std::string& input = "")
{
    Outcome o = run(std::move(args), input);
    INFO(o.err);
    REQUIRE(o.code == 0);
    return io::parse_json(o.out);
}

const std::string pentagon = R"({"points": [[0,0],[2,0],[2,1],[1,2],[0,2]]})";
const std::string square = R"({"points": [[0,0],[1,0],[0,1],[1,1]]})";

}  // namespace

TEST_CASE("documented examples")
{
    CHECK(run({"fvector"}, pentagon).out == "{\"f\":[5,5]}\n");

    io::Json gt = run_json({"gt", "--lambda", "3", "1", "1"});
    CHECK(gt["lattice_points"] == 6);
    io::Json e = run_json({"ehrhart"}, gt["polyhedron"].dump());
    CHECK(e["coefficients"] == io::Json::parse(R"(["1","3","2"])"));

    CHECK(run({"lp"}, R"({"polyhedron": {"inequalities": [["-1","0"]]}, "c": ["1"]})").out ==
          "{\"status\":\"infeasible\"}\n");
}

TEST_CASE("pentagon through the subcommands")
{
    io::Json hull = run_json({"hull"}, pentagon);
    CHECK(hull["inequalities"].size() == 5);
    CHECK(run_json({"volume"}, pentagon)["volume"] == "7/2");
    CHECK(run_json({"lattice-points"}, pentagon)["count"] == 8);
    CHECK(run_json({"facets"}, pentagon)["inequalities"].size() == 5);

    io::Json fan = run_json({"normal-fan"}, pentagon);
    CHECK(fan["maximal_cones"].size() == 5);
    io::Json chk = run_json({"fan-check"}, fan.dump());
    CHECK(chk["valid"] == true);
    CHECK(chk["complete"] == true);

    io::Json lp = run_json({"lp"}, R"({"polyhedron": )" + pentagon + R"(, "c": [1, 1], "k": "1/2"})");
    CHECK(lp["status"] == "optimal");
    CHECK(lp["value"] == "7/2");
    io::Json lpmin = run_json({"lp"}, R"({"polyhedron": )" + pentagon + R"(, "c": [1, 1], "sense": "min"})");
    CHECK(lpmin["optimizer"] == io::Json::parse(R"(["0","0"])"));
    io::Json unb = run_json({"lp"}, R"({"polyhedron": {"points": [[0,0]], "rays": [[1,0]]}, "c": [1, 0]})");
    CHECK(unb["status"] == "unbounded");
}

TEST_CASE("JSON output parses back to the same object")
{
    io::Json hull = run_json({"hull"}, pentagon);
    CHECK(run_json({"hull"}, hull.dump()) == hull);
    io::Json fan = run_json({"normal-fan"}, pentagon);
    CHECK(io::to_json(io::fan_from_json(fan)) == fan);
    io::Json cube = run_json({"hull"}, R"({"inequalities": [[1,1,0,0],[1,-1,0,0],[1,0,1,0],[1,0,-1,0],[1,0,0,1],[1,0,0,-1]]})");
    CHECK(run_json({"hull"}, cube.dump()) == cube);
    io::Json tri = run_json({"triangulations"}, square);
    for (const auto& t : tri["triangulations"])
        CHECK(io::to_json(io::triangulation_from_json(t)) == t);
}

TEST_CASE("exit codes")
{
    CHECK(run({"hull"}, "{\"points\": [[0,0],").code == 2);
    CHECK(run({"hull"}, "{}").code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"fvector", "--format", "xml"}, pentagon).code == 2);
    CHECK(run({"fvector", "--format", "off"}, pentagon).code == 2);
    const std::string cube = R"({"inequalities": [[1,1,0,0],[1,-1,0,0],[1,0,1,0],[1,0,-1,0],[1,0,0,1],[1,0,0,-1]]})";
    CHECK(run({"hvector"}, cube).code == 1);  // not simplicial
    CHECK(run({"normal-fan"}, R"({"points": [[0,0,0],[1,0,0],[0,1,0]]})").code == 1);
    CHECK(run({"hull", "--format", "off"}, pentagon).code == 1);
    CHECK(run({"hull", "--in", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    Outcome o = run({"hvector"}, cube);
    CHECK(o.err.find("not simplicial") != std::string::npos);
}

TEST_CASE("files for input and output")
{
    const std::string in = "qpoly_cli_test_in.json", out = "qpoly_cli_test_out.json";
    {
        std::ofstream f(in);
        f << pentagon;
    }
    CHECK(run({"fvector", "--in", in, "--out", out}).code == 0);
    std::ifstream f(out);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text == "{\"f\":[5,5]}\n");
    std::remove(in.c_str());
    std::remove(out.c_str());
}

TEST_CASE("seeded commands are deterministic")
{
    auto a = run({"rand-sphere", "--dim", "4", "--count", "5", "--seed", "11"});
    auto b = run({"rand-sphere", "--dim", "4", "--count", "5", "--seed", "11"});
    auto c = run({"rand-sphere", "--dim", "4", "--count", "5", "--seed", "12"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    // rand-sphere output is itself a polyhedron document
    CHECK(run_json({"fvector"}, a.out)["f"].size() == 4);

    auto x = run({"bench", "--dim", "3", "--count", "12", "--seed", "3", "--no-time"});
    auto y = run({"bench", "--seed", "3", "--dim", "3", "--count", "12", "--no-time"});
    CHECK(x.code == 0);
    CHECK(x.out == y.out);
}

TEST_CASE("bench facet counts agree across algorithms")
{
    for (int seed = 1; seed <= 20; ++seed) {
        io::Json r = run_json({"bench", "--dim", "3", "--count", "16", "--seed", std::to_string(seed)});
        CHECK(r["facet_counts_agree"] == true);
        REQUIRE(r["runs"].size() == 2);
        const long v = r["vertices"].get<long>();
        CHECK(r["runs"][0]["facets"].get<long>() == 2 * v - 4);
        CHECK(r["runs"][1]["facets"] == r["runs"][0]["facets"]);
    }
    io::Json four = run_json({"bench", "--dim", "4", "--count", "14", "--seed", "9", "--algorithms", "placing", "dd"});
    CHECK(four["runs"][0]["algorithm"] == "placing");
    CHECK(four["facet_counts_agree"] == true);
    CHECK(run({"bench", "--algorithms", "quickhull"}).code == 2);
}

TEST_CASE("gexperiment")
{
    const std::string scatter = "qpoly_cli_test_scatter.txt";
    io::Json ex = run_json({"gexperiment", "--dim", "3", "--count", "12", "--trials", "5", "--seed", "4"});
    CHECK(ex["trials"].size() == 5);
    for (const auto& t : ex["trials"]) {
        const long n = t["vertices"].get<long>();
        CHECK(t["f"] == io::Json::array({n, 3 * n - 6, 2 * n - 4}));
    }
    CHECK(ex["summary"]["g2_min"].is_null());

    io::Json six = run_json({"gexperiment", "--dim", "6", "--count", "9", "--trials", "2", "--seed", "1", "--scatter", scatter});
    CHECK(six["summary"]["ubt_ceiling"] == 3);
    std::ifstream f(scatter);
    std::string header, line;
    std::getline(f, header);
    int rows = 0;
    while (std::getline(f, line))
        ++rows;
    CHECK(rows == 2);
    std::remove(scatter.c_str());
    CHECK(run({"gexperiment", "--dim", "2", "--count", "5"}).code == 2);
}

TEST_CASE("GT and character commands")
{
    io::Json ch = run_json({"gt-char"}, R"({"lambda": [3,1,1], "sigma": [1,3,2]})");
    CHECK(ch["value_at_ones"] == 3);
    CHECK(ch["determinant"] == 3);
    CHECK(ch["terms"].size() == 3);
    CHECK(ch["terms"][0]["exponent"] == io::Json::array({3, 1, 1}));
    io::Json g = run_json({"gt", "--lambda", "3", "1", "1", "--sigma", "1", "3", "2"});
    CHECK(g["lattice_points"] == 3);
    CHECK(run({"gt", "--lambda", "1", "3"}).code == 2);
    CHECK(run({"gt-char", "--lambda", "2", "1"}).code == 2);
}

TEST_CASE("triangulation commands")
{
    io::Json t = run_json({"triangulations"}, square);
    CHECK(t["count"] == 2);
    CHECK(t["triangulations"][0] == io::Json::parse("[[1,2,3],[2,3,4]]"));

    io::Json reg = run_json({"regular"}, square);
    CHECK(reg["regular"] == 2);
    io::Json one = run_json({"regular"}, R"({"points": [[0,0],[1,0],[0,1],[1,1]], "triangulation": [[1,2,4],[1,3,4]]})");
    CHECK(one["regular"] == true);
    CHECK(one["weights"].size() == 4);
    CHECK(run({"regular"}, R"({"points": [[0,0],[1,0],[0,1],[1,1]], "triangulation": [[1,2,3]]})").code == 1);

    io::Json sec = run_json({"secondary"}, square);
    CHECK(sec["vertices"] == 2);
    CHECK(sec["dim"] == 1);

    io::Json orb = run_json({"gkz-orbits", "--cube", "2"}, square);
    CHECK(orb["vectors"] == 2);
    CHECK(orb["orbits"].size() == 1);
    CHECK(orb["orbits"][0]["size"] == 2);
    CHECK(run({"gkz-orbits"}, square).code == 2);

    io::Json cone = run_json({"cone"}, R"({"rays": [[1,0],[1,1],[0,1]]})");
    CHECK(cone["rays"].size() == 2);
    CHECK(cone["pointed"] == true);
}

TEST_CASE("OFF output")
{
    const std::string cube = R"({"points": [[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]})";
    Outcome h = run({"hull", "--format", "off"}, cube);
    CHECK(h.code == 0);
    CHECK(h.out.rfind("OFF\n8 6 0\n", 0) == 0);
    CHECK(run({"export-off"}, cube).out == h.out);

    Outcome f = run({"normal-fan", "--format", "off"}, pentagon);
    CHECK(f.out.rfind("OFF\n", 0) == 0);
    CHECK(f.out.find("\n18 5 0\n") != std::string::npos);

    Outcome x = run({"export-off", "--explode", "1/2"},
                    R"({"points": [[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]],
                        "triangulation": [[1,2,3,5],[2,3,4,8],[2,3,5,8],[2,5,6,8],[3,5,7,8]]})");
    INFO(x.err);
    CHECK(x.code == 0);
    CHECK(x.out.find("\n20 20 0\n") != std::string::npos);
}
