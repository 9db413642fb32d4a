#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "idtnet/cli.hpp"
#include "idtnet/csv_io.hpp"

namespace fs = std::filesystem;
using idtnet::cli::dispatch;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("idtnet_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(std::vector<std::string> args, std::string* err_out = nullptr)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = dispatch(args, out, err);
    if (err_out) {
        *err_out = err.str();
    }
    return code;
}

/// The `# key = value` lines of an artifact, as a config file.
std::string echoed_config(const std::string& path)
{
    std::istringstream in(slurp(path));
    std::string line;
    std::string cfg;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0 && line.find(" = ") != std::string::npos) {
            cfg += line.substr(2) + "\n";
        }
    }
    return cfg;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen is byte-identical across reruns")
{
    TempDir d;
    REQUIRE(run({"gen", "--n", "1000", "--gamma", "1.6", "--seed", "7", "--out", d / "a.csv"}) == 0);
    REQUIRE(run({"gen", "--n", "1000", "--gamma", "1.6", "--seed", "7", "--out", d / "b.csv"}) == 0);
    CHECK(slurp(d / "a.csv") == slurp(d / "b.csv"));
    REQUIRE(run({"gen", "--n", "1000", "--gamma", "1.6", "--seed", "8", "--out", d / "c.csv"}) == 0);
    CHECK(slurp(d / "a.csv") != slurp(d / "c.csv"));
    const auto g = idtnet::io::read_graph_file(d / "a.csv");
    CHECK(g.node_count() == 1000);
    CHECK(g.max_degree() <= 32);
    CHECK(slurp(d / "a.csv").find("# gamma = 1.6\n") != std::string::npos);
}

TEST_CASE("analytic output matches the reference curve")
{
    TempDir d;
    REQUIRE(run({"analytic", "--gamma", "1.6", "--temp", "2.0", "--eps", "1e-3", "--kmax", "77", "--out",
                 d / "a.csv"}) == 0);
    const auto got = idtnet::io::read_analytic_curve(idtnet::io::read_table_file(d / "a.csv"));
    const auto ref = idtnet::io::read_analytic_curve(
        idtnet::io::read_table_file(std::string(IDTNET_GOLDEN_DIR) + "/analytic_gamma1.6_T2.csv"));
    REQUIRE(got.rows.size() == ref.rows.size());
    for (std::size_t i = 0; i < ref.rows.size(); ++i) {
        CHECK(got.rows[i].k == ref.rows[i].k);
        CHECK(got.rows[i].i0 == doctest::Approx(ref.rows[i].i0).epsilon(1e-8));
        CHECK(got.rows[i].d == doctest::Approx(ref.rows[i].d).epsilon(1e-8));
    }
    const std::string text = slurp(d / "a.csv");
    for (const char* key : {"# temp = 2\n", "# eps = 0.001\n", "# kmax = 77\n", "# branch = auto\n", "i_hat="}) {
        CHECK(text.find(key) != std::string::npos);
    }
}

TEST_CASE("idt output is identical for any worker count")
{
    TempDir d;
    REQUIRE(run({"gen", "--n", "150", "--seed", "3", "--out", d / "g.csv"}) == 0);
    std::string first;
    for (const char* w : {"1", "4", "8"}) {
        const std::string out = d / (std::string("e") + w + ".csv");
        const std::string per = d / (std::string("u") + w + ".csv");
        REQUIRE(run({"idt", "--graph", d / "g.csv", "--traj", "200", "--lag", "15", "--equil", "50",
                     "--marginal-sweeps", "200", "--seed", "5", "--workers", w, "--out", out, "--per-unit", per}) ==
                0);
        const std::string both = slurp(out) + slurp(per);
        if (first.empty()) {
            first = both;
        } else {
            CHECK(both == first);
        }
    }
    CHECK(first.find("k,n_units,mean_idt_sweeps,sem_idt,censored") != std::string::npos);
}

TEST_CASE("idt realizations and trajectory dump")
{
    TempDir d;
    REQUIRE(run({"idt", "--n", "100", "--traj", "100", "--lag", "10", "--equil", "20", "--marginal-sweeps", "50",
                 "--realizations", "2", "--seed", "1", "--out", d / "e.csv", "--dump", d / "t.csv"}) == 0);
    CHECK(fs::exists(d / "e.r0.csv"));
    CHECK(fs::exists(d / "e.r1.csv"));
    const auto dump = idtnet::io::read_table_file(d / "t.csv");
    CHECK(dump.header == std::vector<std::string>{"t", "unit", "state"});
    CHECK(dump.rows.size() == 11 * 100);
}

TEST_CASE("oracle, trend and plot")
{
    TempDir d;
    REQUIRE(run({"oracle", "--path", "3", "--step", "site", "--lag", "3", "--out", d / "o.csv"}) == 0);
    const auto o = idtnet::io::read_table_file(d / "o.csv");
    REQUIRE(o.rows.size() == 12);
    // lag 3 steps, center unit, heat-bath rule
    CHECK(idtnet::io::parse_double(o.rows[10][2]) == doctest::Approx(0.2650581134693981).epsilon(1e-10));

    REQUIRE(run({"analytic", "--kmax", "30", "--temp", "2", "--out", d / "a2.csv"}) == 0);
    REQUIRE(run({"analytic", "--kmax", "30", "--temp", "9", "--out", d / "a9.csv"}) == 0);
    REQUIRE(run({"trend", "--in", d / "a2.csv", "--sigma", "2", "--out", d / "t.csv"}) == 0);
    const auto t = idtnet::io::read_xy(idtnet::io::read_table_file(d / "t.csv"));
    CHECK(t.size() == 30);
    // trend output feeds back into trend
    REQUIRE(run({"trend", "--in", d / "t.csv", "--out", d / "t2.csv"}) == 0);

    REQUIRE(run({"idt", "--n", "100", "--traj", "1000", "--lag", "30", "--equil", "50", "--marginal-sweeps", "200",
                 "--temp", "2", "--out", d / "e.csv"}) == 0);
    REQUIRE(run({"plot", "--in", d / "a2.csv", "--in", d / "a9.csv", "--in", d / "e.csv", "--out", d / "p.svg"}) ==
            0);
    const std::string svg = slurp(d / "p.svg");
    CHECK(svg.find("(a) T = 2") != std::string::npos);
    CHECK(svg.find("(b) T = 9") != std::string::npos);
    CHECK(svg.find("class=\"band\"") != std::string::npos);
}

TEST_CASE("echoed configuration reproduces the artifact")
{
    TempDir d;
    REQUIRE(run({"analytic", "--gamma", "2.1", "--kmax", "40", "--temp", "3.5", "--c-eff", "1.2", "--out",
                 d / "a.csv"}) == 0);
    {
        std::ofstream(d / "a.cfg") << echoed_config(d / "a.csv");
    }
    REQUIRE(run({"analytic", "--config", d / "a.cfg", "--out", d / "b.csv"}) == 0);
    CHECK(slurp(d / "a.csv") == slurp(d / "b.csv"));

    REQUIRE(run({"idt", "--n", "80", "--traj", "100", "--lag", "10", "--equil", "20", "--marginal-sweeps", "40",
                 "--seed", "9", "--rule", "glauber", "--out", d / "e.csv"}) == 0);
    {
        std::ofstream(d / "e.cfg") << echoed_config(d / "e.csv");
    }
    REQUIRE(run({"idt", "--config", d / "e.cfg", "--out", d / "f.csv"}) == 0);
    CHECK(slurp(d / "e.csv") == slurp(d / "f.csv"));

    // explicit flags win over the file
    REQUIRE(run({"analytic", "--config", d / "a.cfg", "--temp", "4", "--out", d / "c.csv"}) == 0);
    CHECK(slurp(d / "c.csv").find("# temp = 4\n") != std::string::npos);
}

TEST_CASE("round trip over random configurations")
{
    TempDir d;
    std::mt19937_64 gen(12);
    for (int i = 0; i < 8; ++i) {
        const std::string n = std::to_string(50 + gen() % 400);
        const std::string gamma = std::to_string(1.5 + static_cast<double>(gen() % 100) / 100.0);
        const std::string seed = std::to_string(gen() % 1000);
        const std::string temp = std::to_string(1.0 + static_cast<double>(gen() % 1000) / 100.0);
        REQUIRE(run({"gen", "--n", n, "--gamma", gamma, "--seed", seed, "--out", d / "g.csv"}) == 0);
        const auto g = idtnet::io::read_graph_file(d / "g.csv");
        CHECK(g.node_count() == std::stoul(n));
        REQUIRE(run({"analytic", "--graph", d / "g.csv", "--temp", temp, "--out", d / "a.csv"}) == 0);
        const auto a = idtnet::io::read_analytic_curve(idtnet::io::read_table_file(d / "a.csv"));
        CHECK(a.rows.size() == g.max_degree());
        REQUIRE(run({"idt", "--graph", d / "g.csv", "--temp", temp, "--traj", "100", "--lag", "10", "--equil", "10",
                     "--marginal-sweeps", "20", "--seed", seed, "--out", d / "e.csv"}) == 0);
        CHECK_NOTHROW(idtnet::io::read_empirical_curve(idtnet::io::read_table_file(d / "e.csv")));
    }
}

TEST_CASE("seed falls back to the environment")
{
    TempDir d;
    ::setenv("IDTNET_SEED", "31", 1);
    const int code = run({"gen", "--n", "200", "--out", d / "env.csv"});
    ::unsetenv("IDTNET_SEED");
    REQUIRE(code == 0);
    REQUIRE(run({"gen", "--n", "200", "--seed", "31", "--out", d / "flag.csv"}) == 0);
    CHECK(slurp(d / "env.csv") == slurp(d / "flag.csv"));
}

TEST_CASE("exit codes")
{
    TempDir d;
    std::string err;
    CHECK(run({"frobnicate"}, &err) == idtnet::cli::exit_usage);
    CHECK(run({"gen", "--n", "10", "--wat", "1", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_usage);
    CHECK(err.find('\n') == err.size() - 1);
    CHECK(run({"gen", "--n", "10"}, &err) == idtnet::cli::exit_usage);
    CHECK(run({"idt", "--graph", d / "missing.csv", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_input);
    {
        std::ofstream(d / "bad.csv") << "u,v\n0,zebra\n";
    }
    CHECK(run({"idt", "--graph", d / "bad.csv", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_input);
    CHECK(run({"gen", "--n", "ten", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_numeric);
    CHECK(run({"analytic", "--temp", "-1", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_numeric);
    CHECK(run({"idt", "--n", "100", "--traj", "10", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_numeric);
    CHECK(run({"oracle", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_usage);
    CHECK(run({"analytic", "--config", d / "nope.cfg", "--out", d / "x.csv"}, &err) == idtnet::cli::exit_input);
    CHECK_FALSE(fs::exists(d / "x.csv"));
    CHECK(run({"--help"}, &err) == 0);
}

} // TEST_SUITE
