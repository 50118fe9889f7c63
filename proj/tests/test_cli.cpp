#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "tda/io.hpp"

using namespace tda;

namespace {

namespace fs = std::filesystem;

struct cli_fixture {
    fs::path dir;
    std::string binary;

    cli_fixture() {
        const char* env = std::getenv("TDA_CLI");
        REQUIRE_MESSAGE(env != nullptr, "TDA_CLI must point at the built binary");
        binary = env;
        dir = fs::temp_directory_path() / ("tda_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~cli_fixture() { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    int run(const std::string& args, const std::string& stdout_file = "") const {
        std::string cmd = binary + " " + args + " 2>" + path("stderr.txt");
        if (!stdout_file.empty()) cmd += " >" + stdout_file;
        int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    }

    std::string stderr_text() const { return read_file(path("stderr.txt")); }
};

} // namespace

TEST_CASE("square pipeline: synth, complex, persist") {
    cli_fixture cli;
    REQUIRE(cli.run("synth --shape square --n 4 --out " + cli.path("pts.csv")) == 0);
    REQUIRE(cli.run("complex --input " + cli.path("pts.csv") +
                    " --method rips --rmax 2 --maxdim 2 --out " + cli.path("sq.cplx")) == 0);
    REQUIRE(cli.run("persist --complex " + cli.path("sq.cplx") + " --field 2 --maxdim 1 --out " +
                    cli.path("sq.dgm")) == 0);

    auto dgm = read_file(cli.path("sq.dgm"));
    CHECK(dgm.find("1 1 1.4142135623730951") != std::string::npos);
    CHECK(dgm.find("0 0 inf") != std::string::npos);

    // reproducibility: byte-identical outputs on a second run
    REQUIRE(cli.run("persist --complex " + cli.path("sq.cplx") + " --field 2 --maxdim 1 --out " +
                    cli.path("sq2.dgm")) == 0);
    CHECK(read_file(cli.path("sq2.dgm")) == dgm);

    // distance of a diagram with itself
    REQUIRE(cli.run("distance --a " + cli.path("sq.dgm") + " --b " + cli.path("sq.dgm") +
                        " --metric bottleneck",
                    cli.path("dist.txt")) == 0);
    CHECK(read_file(cli.path("dist.txt")) == "0\n");
}

TEST_CASE("error contract: exit codes and machine-parsable prefixes") {
    cli_fixture cli;
    // closure violation in a complex file: exit 1 with E:closure:
    std::ofstream(cli.path("bad.cplx")) << "0 0\n1 0 1\n"; // edge 0-1 without vertex 1
    CHECK(cli.run("persist --complex " + cli.path("bad.cplx")) == 1);
    CHECK(cli.stderr_text().find("E:closure:") != std::string::npos);

    // unknown flag: exit 2 with E:usage:
    CHECK(cli.run("persist --complex x --definitely-not-a-flag") == 2);
    CHECK(cli.stderr_text().find("E:usage:") != std::string::npos);

    // missing file: computation error
    CHECK(cli.run("persist --complex " + cli.path("nope.cplx")) == 1);
    CHECK(cli.stderr_text().find("E:io:") != std::string::npos);

    // every run prints the version banner to stderr
    CHECK(cli.run("synth --shape circle --n 3", cli.path("ignored.csv")) == 0);
    CHECK(cli.stderr_text().find("tda 0.1.0") != std::string::npos);

    // --help succeeds; a missing subcommand is a usage error
    CHECK(cli.run("--help", cli.path("help.txt")) == 0);
    CHECK(cli.run("") == 2);
}

TEST_CASE("featurize and plot produce their artifacts") {
    cli_fixture cli;
    std::ofstream(cli.path("d.dgm")) << "1 1 3\n";
    REQUIRE(cli.run("featurize --dgm " + cli.path("d.dgm") +
                    " --method algebraic --dim 1 --out " + cli.path("f.csv")) == 0);
    auto csv = read_file(cli.path("f.csv"));
    CHECK(csv.find("x_1_0") != std::string::npos);
    CHECK(csv.find("2,8") != std::string::npos); // x_1_0 = 2 then x_1_1 = 8

    std::ofstream(cli.path("img.json"))
        << R"({"xi_min":0,"xi_max":2,"eta_min":0,"eta_max":3,"n_xi":2,"n_eta":2,"sigma":0.2})";
    REQUIRE(cli.run("featurize --dgm " + cli.path("d.dgm") + " --method image --config " +
                    cli.path("img.json") + " --dim 1 --out " + cli.path("img.csv")) == 0);
    CHECK(read_file(cli.path("img.csv")).find("px_0_0") != std::string::npos);

    // image without a config (sigma has no default) is a usage error
    CHECK(cli.run("featurize --dgm " + cli.path("d.dgm") + " --method image") == 2);

    REQUIRE(cli.run("plot --barcode " + cli.path("d.dgm") + " --out " + cli.path("b.svg")) == 0);
    CHECK(read_file(cli.path("b.svg")).find("<svg") != std::string::npos);
    REQUIRE(cli.run("plot --dgm " + cli.path("d.dgm") + " --out " + cli.path("d.svg")) == 0);
    REQUIRE(cli.run("plot --landscape " + cli.path("d.dgm") + " --dim 1 --out " +
                    cli.path("l.svg")) == 0);
}

TEST_CASE("mapper, zigzag, coverage subcommands") {
    cli_fixture cli;
    // mapper on a small circle sample
    {
        std::ofstream pts(cli.path("circle.csv"));
        std::ofstream filt(cli.path("filter.csv"));
        for (int k = 0; k < 16; ++k) {
            double t = 2.0 * 3.14159265358979323846 * k / 16;
            pts << format_real(std::cos(t)) << "," << format_real(std::sin(t)) << "\n";
            filt << format_real(std::cos(t)) << "\n";
        }
    }
    REQUIRE(cli.run("mapper --input " + cli.path("circle.csv") + " --filter " +
                    cli.path("filter.csv") +
                    " --intervals 4 --overlap 0.5 --bins 10 --out " + cli.path("m.json") +
                    " --svg " + cli.path("m.svg")) == 0);
    auto mjson = read_file(cli.path("m.json"));
    CHECK(mjson.find("\"nodes\"") != std::string::npos);
    CHECK(read_file(cli.path("m.svg")).find("<svg") != std::string::npos);

    // zigzag from an explicit diagram file
    std::ofstream(cli.path("z.zz")) << "3 2\n1 1 1\nF 1 1\n1\nF 1 1\n0\n";
    REQUIRE(cli.run("zigzag --diagram " + cli.path("z.zz"), cli.path("z.out")) == 0);
    CHECK(read_file(cli.path("z.out")) == "1 2\n3 3\n");

    // zigzag built from samples
    std::ofstream(cli.path("groups.txt")) << "0 1 2 3 4 5 6 7\n0 1 2 3 4 5 6 7\n";
    REQUIRE(cli.run("zigzag --build sample --input " + cli.path("circle.csv") + " --groups " +
                        cli.path("groups.txt") + " --r 0.5 --homdim 0 --field 2",
                    cli.path("zs.out")) == 0);
    CHECK(read_file(cli.path("zs.out")) == "1 3\n");

    // coverage report on a triangle
    std::ofstream(cli.path("sensors.json"))
        << R"({"n":3,"R":1.0,"R_c":1.0,"edges":[[0,1],[1,2],[0,2]],"fence":[0,1,2]})";
    REQUIRE(cli.run("coverage --input " + cli.path("sensors.json"), cli.path("cov.json")) == 0);
    auto cov = read_file(cli.path("cov.json"));
    CHECK(cov.find("\"certificate\": true") != std::string::npos);
}

TEST_CASE("synth tree emits a valid distance matrix") {
    cli_fixture cli;
    REQUIRE(cli.run("synth --shape tree --n 8 --seed 5 --out " + cli.path("tree.csv")) == 0);
    auto x = parse_distance_csv(read_file(cli.path("tree.csv")));
    CHECK(x.size() == 8);
    CHECK(validate_metric(x).empty());

    // noisy circle with a fixed seed reproduces
    REQUIRE(cli.run("synth --shape noisy-circle --n 10 --seed 9 --out " + cli.path("n1.csv")) == 0);
    REQUIRE(cli.run("synth --shape noisy-circle --n 10 --seed 9 --out " + cli.path("n2.csv")) == 0);
    CHECK(read_file(cli.path("n1.csv")) == read_file(cli.path("n2.csv")));
}
