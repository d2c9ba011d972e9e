// Exercises the CLI's documented failure modes and success paths end to end.
// Usage: cli_errors <path-to-phaseret-binary>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

int run(const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

void expect(bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream os(path);
    os << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_errors <phaseret binary>\n");
        return 2;
    }
    const std::string tool = argv[1];
    const fs::path dir = fs::temp_directory_path() / "phaseret_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path out = dir / "out";

    const fs::path cfg = dir / "bench.cfg";
    write_text(cfg,
               "rows = 32\ncols = 32\ntile = 8\nsigma = 0.05\nseed = 7\n"
               "num_planes = 3\niterations = 3\nwarm_iterations = 2\n");

    // --- success paths -----------------------------------------------------
    expect(run(tool + " simulate --config " + cfg.string() + " --out " + out.string()) == 0,
           "simulate succeeds");
    const std::string obs = (out / "observations.obs").string();
    const std::string truth = (out / "truth.wf").string();
    expect(fs::exists(obs) && fs::exists(truth), "simulate wrote stack and truth");

    expect(run(tool + " reconstruct --config " + cfg.string() + " " + obs + " --out " +
               out.string() + " --truth " + truth) == 0,
           "reconstruct succeeds");
    expect(fs::exists(out / "reconstruction.wf") && fs::exists(out / "trace.csv") &&
               fs::exists(out / "amplitude.pgm") && fs::exists(out / "phase.pgm"),
           "reconstruct wrote field, trace and renders");

    expect(run(tool + " compare --config " + cfg.string() + " " + obs + " --out " +
               out.string() + " --truth " + truth) == 0,
           "compare succeeds");
    expect(fs::exists(out / "report.csv") && fs::exists(out / "cross_section_phase.csv") &&
               fs::exists(out / "cross_section_amplitude.csv"),
           "compare wrote report and cross sections");

    expect(run(tool + " render " + truth + " --out " + out.string()) == 0, "render succeeds");
    expect(fs::exists(out / "truth_amplitude.pgm") && fs::exists(out / "truth_phase.pgm"),
           "render wrote both images");

    // --- documented failure modes ------------------------------------------
    expect(run(tool) != 0, "no subcommand fails");
    expect(run(tool + " simulate") != 0, "missing --config fails");
    expect(run(tool + " simulate --config " + (dir / "missing.cfg").string()) != 0,
           "absent config fails");

    const fs::path bad_key = dir / "bad_key.cfg";
    write_text(bad_key, "rows = 32\nnot_a_key = 1\n");
    expect(run(tool + " simulate --config " + bad_key.string()) != 0, "unknown key fails");

    const fs::path bad_value = dir / "bad_value.cfg";
    write_text(bad_value, "sigma = minus\n");
    expect(run(tool + " simulate --config " + bad_value.string()) != 0, "bad value fails");

    const fs::path bad_algo = dir / "bad_algo.cfg";
    write_text(bad_algo, "algorithm = newton\n");
    expect(run(tool + " simulate --config " + bad_algo.string()) != 0, "bad algorithm fails");

    expect(run(tool + " reconstruct --config " + cfg.string() + " " +
               (dir / "missing.obs").string()) != 0,
           "missing observations fails");

    const fs::path mismatched = dir / "mismatched.cfg";
    write_text(mismatched, "rows = 64\ncols = 64\ntile = 8\nnum_planes = 3\n");
    expect(run(tool + " reconstruct --config " + mismatched.string() + " " + obs) != 0,
           "observation/config dimension mismatch fails");

    expect(run(tool + " compare --config " + cfg.string() + " " + obs) != 0,
           "compare without --truth fails");

    const fs::path garbage = dir / "garbage.wf";
    write_text(garbage, "this is not a field file");
    expect(run(tool + " render " + garbage.string()) != 0, "corrupt field file fails");
    expect(run(tool + " reconstruct --config " + cfg.string() + " " + obs + " --truth " +
               garbage.string()) != 0,
           "corrupt truth file fails");

    expect(run(tool + " --definitely-not-a-flag") != 0, "unknown flag fails");

    if (failures > 0) {
        std::printf("%d CLI check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
