#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "treeph/cli_app.hpp"
#include "treeph/ingest.hpp"

using namespace treeph;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_root() {
    fs::path p = fs::temp_directory_path() / "treeph_cli_tests";
    fs::create_directories(p);
    return p;
}

// the single run directory created under base
fs::path only_run_dir(const fs::path& base) {
    fs::path found;
    int count = 0;
    for (const auto& e : fs::directory_iterator(base))
        if (e.is_directory()) {
            found = e.path();
            ++count;
        }
    REQUIRE(count == 1);
    return found;
}

} // namespace

TEST_CASE("betti command reports the torus table") {
    fs::path out = temp_root() / "betti_torus";
    fs::remove_all(out);
    CliResult r = run({"betti", "--input", "data/torus.simplices",
                       "--out", out.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
    CHECK(r.out.find("chi = 0") != std::string::npos);
    CHECK(r.out.find("consistent") != std::string::npos);

    fs::path dir = only_run_dir(out);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "betti.txt"));
    CHECK(fs::exists(dir / "betti.csv"));

    std::string csv = read_file((dir / "betti.csv").string());
    CHECK(csv.find("0,9,0,1") != std::string::npos);  // k,m,r,beta
    CHECK(csv.find("1,27,8,2") != std::string::npos);
    CHECK(csv.find("2,18,17,1") != std::string::npos);
}

TEST_CASE("reruns are byte identical") {
    fs::path out = temp_root() / "rerun";
    fs::remove_all(out);
    CliResult r1 = run({"morse", "--input", "data/torus.simplices",
                        "--out", out.string()});
    REQUIRE(r1.code == kExitOk);
    fs::path dir = only_run_dir(out);
    std::string first = read_file((dir / "morse.txt").string());
    std::string manifest1 = read_file((dir / "manifest.json").string());

    CliResult r2 = run({"morse", "--input", "data/torus.simplices",
                        "--out", out.string()});
    REQUIRE(r2.code == kExitOk);
    CHECK(only_run_dir(out) == dir); // same digest-named directory
    CHECK(read_file((dir / "morse.txt").string()) == first);
    CHECK(read_file((dir / "manifest.json").string()) == manifest1);
    CHECK(r1.out == r2.out);
}

TEST_CASE("morse command emits criticals and validation") {
    fs::path out = temp_root() / "morse_torus";
    fs::remove_all(out);
    CliResult r = run({"morse", "--input", "data/torus.simplices",
                       "--out", out.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("filtration steps: n = 28") != std::string::npos);
    CHECK(r.out.find("valid") != std::string::npos);

    fs::path dir = only_run_dir(out);
    std::string criticals = read_file((dir / "criticals.txt").string());
    CHECK(criticals.find("0 (1)") != std::string::npos);
    CHECK(criticals.find("9 (2,3)") != std::string::npos);
    CHECK(criticals.find("10 (4,7)") != std::string::npos);
    CHECK(criticals.find("28 (6,7,9)") != std::string::npos);
    CHECK(fs::exists(dir / "validation.csv"));
    CHECK(fs::exists(dir / "barcode.txt"));
}

TEST_CASE("cavities command with shortening logs the accepted move") {
    fs::path out = temp_root() / "cav_shorten";
    fs::remove_all(out);
    CliResult r = run({"cavities", "--input", "data/table4_iter1.simplices",
                       "--shorten", "--out", out.string()});
    CHECK(r.code == kExitOk);

    fs::path dir = only_run_dir(out);
    std::string moves = read_file((dir / "moves.txt").string());
    CHECK(moves.find("boundary-add") != std::string::npos);
    CHECK(moves.find("(4,13,87,118)") != std::string::npos);
    CHECK(moves.find("10 8") != std::string::npos);

    std::string cav = read_file((dir / "cavities.txt").string());
    CHECK(cav.find("(13,87,118)") != std::string::npos);
}

TEST_CASE("cavities cross checks pass on the torus") {
    fs::path out = temp_root() / "cav_checks";
    fs::remove_all(out);
    CliResult r = run({"cavities", "--input", "data/torus.simplices",
                       "--oriented-check", "--hodge-check",
                       "--out", out.string()});
    CHECK(r.code == kExitOk);
    fs::path dir = only_run_dir(out);
    std::string checks = read_file((dir / "checks.txt").string());
    CHECK(checks.find("agree") != std::string::npos);
}

TEST_CASE("barcodes follows a supplied filtration file") {
    fs::path out = temp_root() / "barcodes_supplied";
    fs::remove_all(out);
    CliResult r = run({"barcodes", "--input", "data/fig3.simplices",
                       "--morse", "data/fig3_first.morse",
                       "--out", out.string()});
    CHECK(r.code == kExitOk);
    fs::path dir = only_run_dir(out);
    std::string text = read_file((dir / "barcode.txt").string());
    CHECK(text.find("0 0 inf") != std::string::npos);
    CHECK(text.find("0 2 6") != std::string::npos);
    CHECK(text.find("1 9 12") != std::string::npos);
    CHECK(text.find("1 10 inf") != std::string::npos);
}

TEST_CASE("barcodes uses distance values from point clouds") {
    fs::path out = temp_root() / "barcodes_vr";
    fs::remove_all(out);
    CliResult r = run({"barcodes", "--input", "data/octahedron.points",
                       "--kind", "point-cloud", "--epsilon", "1.5",
                       "--max-dim", "3", "--out", out.string()});
    CHECK(r.code == kExitOk);
    fs::path dir = only_run_dir(out);
    std::string csv = read_file((dir / "barcode.csv").string());
    CHECK(csv.find("inf") != std::string::npos);
    CHECK(csv.find("dim,birth,death") != std::string::npos);
}

TEST_CASE("network documents round trip through the cli") {
    fs::path out = temp_root() / "network_kind";
    fs::remove_all(out);
    PointCloud cloud = parse_point_cloud(read_file("data/square.points"));
    VietorisRips vr = vr_complex(cloud, 1.5, 2);
    fs::path doc = temp_root() / "square.network.json";
    write_file(doc.string(), save_network(vr.network, &vr.values));

    CliResult r = run({"betti", "--input", doc.string(), "--kind", "network",
                       "--out", out.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("chi = 2") != std::string::npos); // K4 capped at dim 2: 4-6+4
}

TEST_CASE("empty inputs are handled gracefully") {
    fs::path empty = temp_root() / "empty.simplices";
    write_file(empty.string(), "# nothing here\n");
    fs::path out = temp_root() / "empty_run";
    fs::remove_all(out);
    CliResult r = run({"betti", "--input", empty.string(), "--out", out.string()});
    CHECK(r.code == kExitOk);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"betti"}).code == kExitUsage); // no input source
    CHECK(run({"betti", "--nope"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    // point clouds require epsilon
    CHECK(run({"betti", "--input", "data/square.points",
               "--kind", "point-cloud"}).code == kExitUsage);
    // unknown format token
    fs::path out = temp_root() / "fmt";
    CHECK(run({"betti", "--input", "data/torus.simplices",
               "--format", "text,docx", "--out", out.string()}).code == kExitUsage);
    // --input and --ba are mutually exclusive
    CHECK(run({"betti", "--input", "data/torus.simplices",
               "--ba", "n=10"}).code == kExitUsage);

    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"betti", "--help"}).code == kExitOk);
}

TEST_CASE("parse failures exit with code 3") {
    fs::path bad = temp_root() / "bad.simplices";
    write_file(bad.string(), "1,2\n2,2\n");
    fs::path out = temp_root() / "parse_fail";
    CliResult r = run({"betti", "--input", bad.string(), "--out", out.string()});
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("line 2") != std::string::npos);

    CliResult missing = run({"betti", "--input", "data/__none__.simplices",
                             "--out", out.string()});
    CHECK(missing.code == kExitParse);
}

TEST_CASE("dimension errors exit with code 4") {
    fs::path out = temp_root() / "dim_fail";
    CliResult r = run({"betti", "--input", "data/square.points",
                       "--kind", "point-cloud", "--epsilon", "-2",
                       "--out", out.string()});
    CHECK(r.code == kExitDimension);
}

TEST_CASE("generated graphs flow through the pipeline") {
    fs::path out = temp_root() / "ba_small";
    fs::remove_all(out);
    CliResult r = run({"betti", "--ba", "n=40", "m=2", "seed=42", "--max-dim", "2",
                       "--out", out.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("chi") != std::string::npos);
}
