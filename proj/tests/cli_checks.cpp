// Drives the installed CLI binary and checks output surfaces and exit codes.
// Usage: cli_checks <path-to-cli> <models-dir>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& command) {
  const std::string full = command + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::fprintf(stderr, "cannot spawn: %s\n", command.c_str());
    std::exit(2);
  }
  std::string output;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    output.append(buf.data(), got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

void check(bool ok, const std::string& name, const RunResult& r) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", name.c_str());
  if (!ok) {
    std::printf("  exit=%d output:\n%s\n", r.exit_code, r.output.c_str());
    ++failures;
  }
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: cli_checks <cli> <models-dir>\n");
    return 2;
  }
  const std::string cli = argv[1];
  const std::string models = argv[2];
  auto model = [&](const char* name) { return " " + models + "/" + name; };

  RunResult r = run(cli + " bel" + model("coin_iid.json"));
  check(r.exit_code == 0 && contains(r.output, "Bel(.)") && contains(r.output, ".25"),
        "bel renders the iid-coin envelope", r);

  r = run(cli + " mobius" + model("coin_two_biased.json"));
  check(r.exit_code == 0 && contains(r.output, "-.25") && contains(r.output, "(.5)"),
        "mobius shows the signed masses of the two-coins model", r);

  r = run(cli + " envelope --raw" + model("coin_mixture.json"));
  check(r.exit_code == 0 && contains(r.output, "raw lower values:"),
        "envelope --raw appends unsnapped values", r);

  r = run(cli + " representable" + model("coin_two_biased.json"));
  check(r.exit_code == 0 && contains(r.output, "representable: no") &&
            contains(r.output, "m({124}) = -0.25"),
        "representable reports the negative Moebius events", r);

  r = run(cli + " representable" + model("coin_iid.json"));
  check(r.exit_code == 0 && contains(r.output, "representable: yes"),
        "representable accepts the iid model", r);

  r = run(cli + " monotone --order 2" + model("coin_two_biased.json"));
  check(r.exit_code == 0 && contains(r.output, "violated") &&
            contains(r.output, "{12} {14}"),
        "monotone --order 2 reports the witness pair", r);

  r = run(cli + " monotone --order inf" + model("coin_iid.json"));
  check(r.exit_code == 0 && contains(r.output, "holds"),
        "monotone --order inf accepts a belief function", r);

  r = run(cli + " monotone --order junk" + model("coin_iid.json"));
  check(r.exit_code == 2 && contains(r.output, "--order"),
        "monotone rejects a malformed order", r);

  r = run(cli + " combine" + model("zadeh_witness_1.json") + model("zadeh_witness_2.json"));
  check(r.exit_code == 0 && contains(r.output, "B: 1") &&
            contains(r.output, "conflict: 0.9999") && contains(r.output, "warning:"),
        "combine warns about the Zadeh conflict", r);

  r = run(cli + " combine" + model("conflict_left.json") + model("conflict_right.json"));
  check(r.exit_code == 3, "total conflict exits 3", r);

  r = run(cli + " condition --on A+B" + model("bayes_prior.json"));
  check(r.exit_code == 0 && contains(r.output, "A: 2/3, B: 1/3"),
        "condition renormalizes the prior", r);

  r = run(cli + " condition --on B" + model("conflict_left.json"));
  check(r.exit_code == 2 && contains(r.output, "probability 0"),
        "conditioning on a null event exits 2", r);

  r = run(cli + " vertices" + model("coin_iid.json"));
  check(r.exit_code == 0 && contains(r.output, "(0.75, 0.25, 0, 0)"),
        "vertices lists the dominating polytope", r);

  r = run(cli + " vertices" + model("dempster_die.json"));
  check(r.exit_code == 0 && contains(r.output, "(0.5, 0.5, 0)"),
        "vertices echoes a vertex model", r);

  r = run(cli + " geometry --samples 3" + model("coin_iid.json"));
  check(r.exit_code == 0 && contains(r.output, "label,x,y,z") &&
            contains(r.output, "v0,") && contains(r.output, "s0,"),
        "geometry emits CSV with vertex and sample rows", r);

  r = run(cli + " geometry" + model("dempster_die.json"));
  check(r.exit_code == 2, "geometry on a 3-atom frame exits 2", r);

  r = run(cli + " decide" + model("coin_mixture.json"));
  check(r.exit_code == 0 && contains(r.output, "favourable members: no") &&
            contains(r.output, "-0.0625"),
        "decide reports the mixture gamble range", r);

  r = run(cli + " decide" + model("coin_iid.json"));
  check(r.exit_code == 0 && contains(r.output, "favourable members: yes"),
        "decide reports the iid gamble range", r);

  r = run(cli + " mobius" + model("single_flip.json"));
  check(r.exit_code == 0 && contains(r.output, "m(.)") && contains(r.output, ".5"),
        "mobius round-trips a mass model", r);

  r = run(cli + " envelope --tolerance 1e-9" + model("coin_iid.json"));
  check(r.exit_code == 0 && contains(r.output, "Bel(.)"),
        "envelope accepts a custom snap tolerance", r);

  r = run(cli + " paper table3");
  check(r.exit_code == 0 && contains(r.output, "(.5)"),
        "paper table3 matches its golden", r);

  r = run(cli + " paper decision --epsilon 3/4");
  check(r.exit_code == 0 && contains(r.output, "A favourable: no"),
        "paper decision honours --epsilon", r);

  r = run(cli + " paper nonsense");
  check(r.exit_code == 2, "unknown reproduction id exits 2", r);

  r = run(cli + " bel" + model("bad_mass_sum.json"));
  check(r.exit_code == 2 && contains(r.output, "mass sum 9/10"),
        "mass not summing to 1 exits 2 with the sum", r);

  r = run(cli + " bel" + model("bad_syntax.json"));
  check(r.exit_code == 2 && contains(r.output, "parse error at"),
        "malformed JSON exits 2 with a position", r);

  r = run(cli + " bel /nonexistent.json");
  check(r.exit_code == 2, "missing file exits 2", r);

  if (failures) {
    std::printf("%d CLI check(s) failed\n", failures);
    return 1;
  }
  std::printf("all CLI checks passed\n");
  return 0;
}
