// End-to-end CLI tests. Invoked by ctest as:
//   fie_cli_tests <path-to-fie-binary> <fixtures-dir>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    std::FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

size_t line_count(const std::string& text) {
    size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string cur;
    while (std::getline(in, cur))
        if (cur == line) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: fie_cli_tests <fie-binary> <fixtures-dir>\n";
        return 2;
    }
    const std::string fie = q(argv[1]);
    const std::filesystem::path fixtures(argv[2]);
    const std::filesystem::path tmp =
        std::filesystem::temp_directory_path() / ("fie_cli_test_" + std::to_string(getpid()));
    std::filesystem::create_directories(tmp);

    const std::string demo = q((fixtures / "demo4.frs").string());
    const std::string obs4 = q((fixtures / "obs4.txt").string());
    const std::string engine = q((fixtures / "engine31.frs").string());
    const std::string obs31 = q((fixtures / "obs31.txt").string());
    const std::string bad = q((fixtures / "bad_grade.frs").string());

    // run: reference inference.
    CmdResult run = run_cmd(fie + " run --rules " + demo + " --input " + obs4);
    check(run.exit_code == 0, "run exits 0");
    check(run.out == "8 8 8 8\n", "run prints '8 8 8 8', got: " + run.out);

    // run: validation failures exit 2, io failures exit 3.
    check(run_cmd(fie + " run --rules " + bad + " --input " + obs4).exit_code == 2,
          "malformed rules exit 2");
    check(run_cmd(fie + " run --rules /no/such.frs --input " + obs4).exit_code == 3,
          "missing rules file exits 3");
    check(run_cmd(fie + " nonsense").exit_code == 2, "unknown subcommand exits 2");

    // sim: matches run, reports the cycle count, writes a trace.
    const std::string trace_path = (tmp / "demo.trace.csv").string();
    CmdResult sim = run_cmd(fie + " sim --rules " + demo + " --input " + obs4 + " --trace " +
                            q(trace_path));
    check(sim.exit_code == 0, "sim exits 0");
    check(has_line(sim.out, "8 8 8 8"), "sim prints the same conclusion as run");
    check(has_line(sim.out, "cycles=40"), "sim reports 40 cycles at E=4, got: " + sim.out);
    {
        std::ifstream trace(trace_path);
        check(trace.good(), "trace file written");
        std::string text((std::istreambuf_iterator<char>(trace)),
                         std::istreambuf_iterator<char>());
        check(line_count(text) == 41, "trace has header + 40 rows");
        check(text.rfind("cycle,phase,", 0) == 0, "trace starts with the header");
    }

    // sim at full scale: 256 cycles, conclusion equal to run's.
    CmdResult run31 = run_cmd(fie + " run --rules " + engine + " --input " + obs31);
    CmdResult sim31 = run_cmd(fie + " sim --rules " + engine + " --input " + obs31);
    check(run31.exit_code == 0 && sim31.exit_code == 0, "31-element fixtures run");
    check(has_line(sim31.out, "cycles=256"), "sim reports 256 cycles at E=31");
    std::string first_line = run31.out.substr(0, run31.out.find('\n'));
    check(has_line(sim31.out, first_line), "sim conclusion equals run conclusion");

    // check: deterministic, passes, exits 0.
    const std::string check_cmd =
        fie + " check --trials 200 --seed 11 --elements 8 --rule-count 4 --capacity 8";
    CmdResult chk1 = run_cmd(check_cmd);
    CmdResult chk2 = run_cmd(check_cmd);
    check(chk1.exit_code == 0, "check exits 0 on agreement");
    check(has_line(chk1.out, "result=pass"), "check reports pass");
    check(has_line(chk1.out, "failures=0"), "check reports zero failures");
    check(chk1.out == chk2.out, "identical seed gives byte-identical report");

    // check with a fixed rule set.
    CmdResult chk3 = run_cmd(fie + " check --rules " + demo + " --trials 100 --seed 1");
    check(chk3.exit_code == 0 && has_line(chk3.out, "result=pass"), "fixed-rules check passes");

    // romdump / romload round trip.
    const std::string rom_path = (tmp / "demo.rom").string();
    CmdResult dump = run_cmd(fie + " romdump --rules " + demo + " --out " + q(rom_path));
    check(dump.exit_code == 0, "romdump exits 0");
    check(has_line(dump.out, "rules=2") && has_line(dump.out, "elements=4"),
          "romdump reports the image shape");
    CmdResult load = run_cmd(fie + " romload --rom " + q(rom_path));
    check(load.exit_code == 0, "romload exits 0");
    check(has_line(load.out, "A0=15 8 0 0"), "romload recovers rule 0 antecedent");
    check(has_line(load.out, "C1=15 10 5 0"), "romload recovers rule 1 conclusion");

    // sim rejects rule shapes the chip cannot hold.
    const std::string multi_path = (tmp / "multi.frs").string();
    {
        std::ofstream multi(multi_path);
        multi << "elements 3\nantecedents 2\nrule\nA1 1 2 3\nA2 3 2 1\nC 0 15 0\n";
    }
    const std::string obs2_path = (tmp / "obs2.txt").string();
    {
        std::ofstream obs2(obs2_path);
        obs2 << "1 2 3\n4 5 6\n";
    }
    check(run_cmd(fie + " sim --rules " + q(multi_path) + " --input " + q(obs2_path))
                  .exit_code == 2,
          "multi-antecedent rule set cannot be simulated");
    check(run_cmd(fie + " run --rules " + q(multi_path) + " --input " + q(obs2_path))
                  .exit_code == 0,
          "multi-antecedent rule set still runs in the reference model");

    // bench: exact FLIPS arithmetic at the stock clock, and scaling.
    CmdResult bench = run_cmd(fie + " bench --rules " + engine + " --duration 1");
    check(bench.exit_code == 0, "bench exits 0");
    check(has_line(bench.out, "cycles_per_inference=256"), "bench reports 256 cycles");
    check(has_line(bench.out, "simulated_clock_hz=20800000"), "bench reports the stock clock");
    check(has_line(bench.out, "simulated_flips=81250"), "bench reports 81250 simulated FLIPS");
    check(bench.out.find("golden_flips_min=") != std::string::npos, "bench times the reference");
    check(bench.out.find("chipsim_flips_min=") != std::string::npos, "bench times the chip sim");

    CmdResult bench_demo = run_cmd(fie + " bench --rules " + demo + " --input " + obs4 +
                                   " --duration 1 --clock-hz 20800000");
    check(has_line(bench_demo.out, "cycles_per_inference=40"), "bench reports 40 cycles at E=4");
    check(has_line(bench_demo.out, "simulated_flips=520000"),
          "bench reports 520000 simulated FLIPS at E=4");

    check(run_cmd(fie + " bench --rules " + demo + " --duration 0.5").exit_code == 2,
          "bench rejects sub-second durations");

    std::filesystem::remove_all(tmp);
    if (g_failures == 0) std::cout << "cli tests passed\n";
    return g_failures == 0 ? 0 : 1;
}
