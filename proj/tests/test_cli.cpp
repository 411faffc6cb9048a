#include <tiltwall/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tiltwall;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string field(const std::string& text, const std::string& key)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
    return {};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("tiltwall_test_" + name);
}

} // namespace

TEST(Cli, ChernReport)
{
    auto r = run({"ch", "P_x"});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_EQ(field(r.out, "ku_class"), "-l1 + 2*l2");
    EXPECT_EQ(field(r.out, "mu_H"), "-1/3");
    EXPECT_EQ(field(r.out, "Delta_H"), "16");
    EXPECT_EQ(field(r.out, "chi"), "0");
    // Ku literal input gives the same report
    EXPECT_EQ(run({"ch", "2*l2 - l1"}).out, r.out);
    EXPECT_EQ(run({"ch", "(3, -1, -1/2, 1/3)"}).out, r.out);
}

TEST(Cli, PrintedLiteralsRoundTrip)
{
    for (std::string lit : {"(3, -1, -1/2, 1/3)", "(0, 1, 1/2, -1/3)", "(2, -1, 0, 1/12)", "(-4, 3, -9/2, 7/12)"}) {
        auto r = run({"ch", lit});
        ASSERT_EQ(r.code, 0) << lit << r.err;
        std::string printed = field(r.out, "ch");
        EXPECT_EQ(printed, lit);
        EXPECT_EQ(run({"ch", printed}).out, r.out);
    }
    for (std::string lit : {"-l1 + 2*l2", "l2", "-3*l1 - l2"}) {
        auto r = run({"ch", lit});
        ASSERT_EQ(r.code, 0) << lit;
        EXPECT_EQ(field(r.out, "ku_class"), lit);
    }
}

TEST(Cli, Wall)
{
    auto r = run({"wall", "(0,1,1/2)", "O(-2H)"});
    // O(-2H) itself, not its shift: the wall is the same
    EXPECT_EQ(r.out, "S center=1/2 r2=25/4\n");
    EXPECT_EQ(run({"wall", "P_x", "(6,-2,-1,2/3)"}).out, "Everywhere\n");
}

TEST(Cli, Searches)
{
    auto r = run({"walls", "P_x"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("summary count=0 witness_beta=-1"), std::string::npos);
    r = run({"destab", "(0,1,1/2)", "--beta", "1/2"});
    EXPECT_NE(r.out.find("summary count=2"), std::string::npos);
    EXPECT_NE(r.out.find("alpha2=1/4"), std::string::npos);
    r = run({"limitsearch", "2*l2 - l1"});
    EXPECT_NE(r.out.find("(a,b)=(-2,1)"), std::string::npos);
    EXPECT_NE(r.out.find("survivors=1"), std::string::npos);
    r = run({"limitsearch", "l2"});
    EXPECT_NE(r.out.find("survivors=0"), std::string::npos);
}

TEST(Cli, RegionAndCatalog)
{
    EXPECT_EQ(run({"region", "V", "--alpha2", "1/16", "--beta", "-1/2"}).out, "V: inside\n");
    EXPECT_EQ(run({"region", "V", "--alpha2", "1/4", "--beta", "-1/2"}).out, "V: outside\n");
    auto r = run({"catalog"});
    EXPECT_EQ(r.code, 0);
    for (const auto& e : catalog().entries()) EXPECT_NE(r.out.find(e.name), std::string::npos) << e.name;
    EXPECT_NE(run({"catalog", "spinor"}).out.find("(2, -1, 0, 1/12)"), std::string::npos);
    EXPECT_EQ(run({"catalog", "nothing"}).code, cli::exit_usage);
}

TEST(Cli, Repro)
{
    auto r = run({"repro", "--all"});
    EXPECT_EQ(r.code, cli::exit_ok) << r.out;
    EXPECT_NE(r.out.find("22/22"), std::string::npos);
    r = run({"repro", "--check", "C14", "--machine"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("check=C14 status=pass"), std::string::npos);
}

TEST(Cli, Errors)
{
    EXPECT_EQ(run({"ch", "(1, 2"}).code, cli::exit_usage);
    EXPECT_EQ(run({"ch", "(1, 1/3, 0)"}).code, cli::exit_usage);
    EXPECT_EQ(run({"ch", "(1, 1/3, 0)", "--off-lattice"}).code, cli::exit_ok);
    EXPECT_EQ(run({"limitsearch", "O"}).code, cli::exit_usage);
    EXPECT_EQ(run({}).code, cli::exit_usage);
    EXPECT_EQ(run({"repro", "--check", "C99"}).code, cli::exit_usage);
    auto r = run({"wall", "(0,0,0,0)", "P_x"});
    EXPECT_EQ(r.code, cli::exit_usage);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Geometry)
{
    std::string p3 = std::string(TILTWALL_DATA_DIR) + "/geometry/p3.cfg";
    auto r = run({"--geometry", p3, "chi", "O", "O(H)"});
    EXPECT_EQ(r.out, "4\n");
    std::string qd = std::string(TILTWALL_DATA_DIR) + "/geometry/quadric.cfg";
    EXPECT_EQ(run({"--geometry", qd, "chi", "O", "O(H)"}).out, "5\n");
    EXPECT_EQ(run({"--geometry", "/nonexistent.cfg", "chi", "O", "O"}).code, cli::exit_usage);
}

TEST(Cli, PlotTsvPointsLieOnWalls)
{
    auto path = temp_file("walls.tsv");
    auto r = run({"plot", "(0,1,1/2)", "--walls", "O(-2H), O(-3H)", "-o", path.string(), "--samples", "64"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "wall-id\tbeta\talpha");
    std::map<std::string, NumericalWall> walls{
        {"w1", NumericalWall::semicircle(make_rational(1, 2), make_rational(25, 4))},
        {"w2", NumericalWall::semicircle(make_rational(1, 2), make_rational(49, 4))}};
    std::string id;
    double beta, alpha;
    int rows = 0;
    while (in >> id >> beta >> alpha) {
        ASSERT_TRUE(walls.count(id)) << id;
        EXPECT_LT(cli::wall_residual(walls.at(id), beta, alpha), 1e-12);
        EXPECT_GE(alpha, 0.0);
        ++rows;
    }
    EXPECT_EQ(rows, 2 * 64);
    std::filesystem::remove(path);
}

TEST(Cli, PlotDefaultWallsAndSvg)
{
    auto tsv = temp_file("default.tsv");
    auto r = run({"plot", "(0,1,1/2)", "-o", tsv.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(tsv);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_GT(rows, 0);
    std::filesystem::remove(tsv);

    auto svg = temp_file("walls.svg");
    r = run({"plot", "P_x", "--walls", "O(3H)", "-o", svg.string(), "--format", "svg"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream s(svg);
    std::string doc((std::istreambuf_iterator<char>(s)), std::istreambuf_iterator<char>());
    EXPECT_NE(doc.find("<svg"), std::string::npos);
    EXPECT_NE(doc.find("</svg>"), std::string::npos);
    EXPECT_NE(doc.find("<polyline"), std::string::npos);
    std::filesystem::remove(svg);
}

TEST(Cli, SampledWallResidual)
{
    auto w = NumericalWall::semicircle(make_rational(7, 5), make_rational(64, 25));
    auto c = cli::sample_wall("w1", w, 200, 10.0);
    ASSERT_FALSE(c.points.empty());
    for (auto [b, a] : c.points) EXPECT_LT(cli::wall_residual(w, b, a), 1e-12);
}
