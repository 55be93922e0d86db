#include <doctest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "nng/errors.hpp"
#include "nng/runner/config.hpp"
#include "nng/runner/output.hpp"
#include "nng/runner/run.hpp"

using namespace nng;
using namespace nng::runner;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("nng_test_runner_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

const char* kSmallFree = R"(
scenario = free-check
grid.x_min = -16
grid.x_max = 16
grid.n = 128
evolve.dt = 0.005
evolve.steps = 60
evolve.record_every = 20
)";

const char* kSmallTwoPacket = R"(
scenario = two-packet-decoherence
grid.x_min = -24
grid.x_max = 24
grid.n = 128
evolve.dt = 0.01
evolve.steps = 80
evolve.record_every = 40
coupling = 0.5
packet.separation = 8
scan.couplings = 0.1, 0.4
scan.steps = 20
)";

// Every scientific output, keyed by name (the manifest and its timestamps excluded).
std::map<std::string, std::string> outputs(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().filename() != "manifest.json") out[e.path().filename().string()] = slurp(e.path());
    }
    return out;
}

int shell(const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("config defaults and grammar") {
    SUBCASE("minimal cow sweep picks the neutron preset") {
        const ScenarioConfig c = parse_config("scenario = cow-sweep\n");
        CHECK(c.cow_preset == "neutron");
        CHECK(c.cow_mass == 1.675e-27);
        CHECK(c.cow_radius == 1e-15);
        CHECK(c.cow_L == 0.10);
        CHECK(c.cow_v == 2.2e3);
        CHECK(c.delta_n == 1000);
    }
    SUBCASE("comments, blank lines and lists") {
        const ScenarioConfig c = parse_config("# header\n\nscenario = two-packet-decoherence  # trailing\n"
                                              "scan.couplings = 0.1, 0.2,0.3\n");
        CHECK(c.scan_couplings == std::vector<double>{0.1, 0.2, 0.3});
        CHECK(c.evolution.d_cut == 4.0 * c.packet.width);
    }
    SUBCASE("d_cut follows the packet width unless set") {
        CHECK(parse_config("scenario = free-check\npacket.width = 1.5\n").evolution.d_cut == 6.0);
        CHECK(parse_config("scenario = free-check\nd_cut = 2\n").evolution.d_cut == 2.0);
    }
}

TEST_CASE("config rejections name the key and constraint") {
    CHECK(contains(error_of("scenario = free-check\ngrid.n = 100\n"), "grid.n"));
    CHECK(contains(error_of("scenario = free-check\ngrid.n = 100\n"), "power of two"));

    const std::string cfl = error_of("scenario = free-check\nevolve.dt = 0.1\n");
    CHECK(contains(cfl, "evolve.dt"));
    CHECK(contains(cfl, "CFL"));
    // Bound for [-40, 40] at n = 512: (pi/4) * 2 / k_max^2 with k_max = pi / dx.
    const double dx = 80.0 / 512.0;
    const double bound = (std::numbers::pi / 4.0) * 2.0 / ((std::numbers::pi / dx) * (std::numbers::pi / dx));
    std::ostringstream b;
    b.precision(17);
    b << bound;
    CHECK(contains(cfl, b.str().substr(0, 10)));

    CHECK(contains(error_of("scenario = free-check\ngrid.nn = 64\n"), "unknown key"));
    CHECK(contains(error_of("scenario = free-check\ncow.v = 3\n"), "does not apply"));
    CHECK(contains(error_of("scenario = free-check\ngrid.n = 64\ngrid.n = 128\n"), "duplicate"));
    CHECK(contains(error_of("scenario = cow-sweep\ncow.v = 1000\n"), "cow.preset = custom"));
    CHECK(error_of("scenario = cow-sweep\ncow.preset = custom\ncow.v = 1000\n").empty());
    CHECK(contains(error_of("grid.n = 64\n"), "scenario"));
    CHECK(contains(error_of("scenario = nonsense\n"), "unknown scenario"));
    CHECK(contains(error_of("scenario = free-check\ngrid.n\n"), "line 2"));
    CHECK(contains(error_of("scenario = free-check\nevolve.dt = fast\n"), "evolve.dt"));
    CHECK(contains(error_of("scenario = free-check\npacket.center = 30\n"), "packet.center"));
}

TEST_CASE("resolved config reproduces itself") {
    for (const char* text : {kSmallFree, kSmallTwoPacket, "scenario = cow-sweep\ncow.preset = custom\ncow.v = 10\n",
                             "scenario = perturbative-crosscheck\n", "scenario = potential-scan\n"}) {
        const ScenarioConfig a = parse_config(text);
        std::string again;
        for (const auto& [k, v] : a.resolved()) again += k + " = " + v + "\n";
        CHECK(parse_config(again).resolved() == a.resolved());
    }
}

TEST_CASE("SI species resolve to a dimensionless coupling") {
    const ScenarioConfig c = parse_config("scenario = two-packet-decoherence\nspecies.mass = 1e-17\n"
                                          "species.radius = 1e-7\n");
    const auto [g, radius] = c.resolved_coupling_and_radius();
    CHECK(std::abs(g / 0.60014114432904413 - 1.0) < 1e-14);
    CHECK(radius == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("field dump round trip and checksums") {
    const fs::path dir = scratch_dir("dump");
    const Grid1D g(-8.0, 8.0, 16);
    ComplexField f(16);
    for (std::size_t k = 0; k < f.size(); ++k) f.values()[k] = {std::sin(0.3 * k), std::cos(1.7 * k)};
    const MetaState s(g, f, 0.625);
    const auto files = write_field_dump(dir / "state", s, UnitMode::dimensionless);
    CHECK(files.size() == 2);
    CHECK(fs::file_size(dir / "state.bin") == 16 * 16 * 16);
    const MetaState back = read_field_dump(dir / "state");
    CHECK(back.amplitudes() == f);
    CHECK(back.grid() == g);
    CHECK(back.time() == 0.625);

    write_text(dir / "abc.txt", "abc");
    CHECK(sha256_file(dir / "abc.txt") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK_THROWS_AS(sha256_file(dir / "missing"), IoError);
}

TEST_CASE("format_double round trips") {
    for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 0.0034641016151377543}) {
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("run writes a manifest with matching checksums") {
    const fs::path dir = scratch_dir("manifest");
    const RunOutcome r = run(parse_config(kSmallFree), dir);
    REQUIRE(r.exit_code == exit_ok);
    CHECK(r.status == "ok");
    CHECK(r.manifest["version"] == NNG_VERSION);
    CHECK(r.manifest["config"]["grid.n"] == "128");
    CHECK(r.manifest.contains("started"));
    CHECK(r.manifest.contains("finished"));
    CHECK(r.manifest["diagnostics"].empty());
    for (const auto& f : r.manifest["files"]) {
        const fs::path p = dir / f["path"].get<std::string>();
        CHECK(sha256_file(p) == f["sha256"]);
        CHECK(fs::file_size(p) == f["bytes"].get<std::uintmax_t>());
    }
    // Manifest written last: every listed file predates it.
    const auto manifest_time = fs::last_write_time(dir / "manifest.json");
    for (const auto& e : fs::directory_iterator(dir)) CHECK(e.last_write_time() <= manifest_time);

    const Json summary = Json::parse(slurp(dir / "summary.json"));
    CHECK(summary["results"].contains("spreading_max_rel_err"));
    CHECK(summary["passed"] == true);
}

TEST_CASE("identical runs give identical outputs for any thread count") {
    for (const char* text : {kSmallFree, kSmallTwoPacket, "scenario = cow-sweep\ncow.delta_n = 50\n"}) {
        const ScenarioConfig cfg = parse_config(text);
        std::map<std::string, std::string> reference;
        for (const char* threads : {"1", "3", "1"}) {
            setenv("NNG_NUM_THREADS", threads, 1);
            const fs::path dir = scratch_dir(std::string("det_") + threads);
            const RunOutcome r = run(cfg, dir);
            CHECK(r.manifest["worker_threads"] == std::atoi(threads));
            const auto now = outputs(dir);
            if (reference.empty()) reference = now;
            CHECK(now == reference);
        }
        unsetenv("NNG_NUM_THREADS");
    }
}

TEST_CASE("failed checks and aborts map to exit codes") {
    SUBCASE("a failed scenario check is a numerical failure") {
        // Without the pair potential the two-packet state never decoheres.
        std::string text = kSmallTwoPacket;
        text.replace(text.find("coupling = 0.5"), 14, "coupling = 0");
        const fs::path dir = scratch_dir("failed_check");
        const RunOutcome r = run(parse_config(text), dir);
        CHECK(r.exit_code == exit_numerical);
        CHECK(r.status == "checks_failed");
        CHECK(contains(r.message, "purity_min"));
        CHECK(fs::exists(dir / "manifest.json"));
        CHECK(r.manifest["diagnostics"].size() == 1);
    }
    SUBCASE("unreadable config is an I/O failure") {
        CHECK(run_config_file(scratch_dir("io") / "nope.cfg", scratch_dir("io_out")).exit_code == exit_io);
    }
}

TEST_CASE("command line exit statuses") {
    const std::string exe = NNGLAB_EXE;
    const fs::path dir = scratch_dir("cli");
    write_text(dir / "bad.cfg", "scenario = free-check\ngrid.n = 100\n");
    write_text(dir / "small.cfg", kSmallFree);
    CHECK(shell(exe + " run --config " + (dir / "bad.cfg").string() + " --out " + (dir / "o1").string()) == 1);
    CHECK(shell(exe + " run --config " + (dir / "missing.cfg").string() + " --out " + (dir / "o2").string()) == 3);
    CHECK(shell(exe + " run --config " + (dir / "small.cfg").string() + " --out " + (dir / "o3").string()) == 0);
    CHECK(shell(exe + " frobnicate") == 1);
    CHECK(shell(exe + " potential --mass 1 --radius 1 --r-max -1 --out " + (dir / "p.csv").string()) == 1);
    CHECK(shell(exe + " cow --delta-sweep 0:1:5 --mass 1e-26 --radius 1e-15 --L 0.1 --v 100 --out " +
                (dir / "c.csv").string()) == 0);
    CHECK(shell(exe + " cow --delta-sweep 0:1:5 --preset neutron --v 100 --out " + (dir / "c.csv").string()) == 1);
    CHECK(shell(exe + " potential --mass 1 --radius 1 --r-max 1 --out /nonexistent/dir/p.csv") == 3);

    // The potential passthrough emits r, V_G.
    REQUIRE(shell(exe + " potential --mass 2 --radius 0.5 --r-max 2 --samples 5 --out " + (dir / "v.csv").string()) ==
            0);
    std::ifstream in(dir / "v.csv");
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "r,V_G");
    // r = 0: -(3/5) G m^2 / R in SI.
    CHECK(std::stod(first.substr(2)) == doctest::Approx(-0.6 * 6.67430e-11 * 4.0 / 0.5).epsilon(1e-14));

    // Each configs/ example parses.
    for (const auto& e : fs::directory_iterator(NNG_CONFIG_DIR)) CHECK_NOTHROW(load_config(e.path()));
}
