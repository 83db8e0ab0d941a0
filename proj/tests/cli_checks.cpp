// Integration checks for the command-line tool. Takes the binary path as
// argv[1], drives it through files and pipes, and verifies exit codes,
// determinism, and that emitted JSON parses back.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hinges/json_io.hpp"

namespace fs = std::filesystem;
using namespace hinges;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok] " : "[FAIL] ") << what << "\n";
  if (!ok) ++failures;
}

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& cmd) {
  fs::path outp = fs::temp_directory_path() / "hingecli_out.txt";
  fs::path errp = fs::temp_directory_path() / "hingecli_err.txt";
  std::string full = cmd + " > " + outp.string() + " 2> " + errp.string();
  int raw = std::system(full.c_str());
  RunResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ostringstream so, se;
  so << std::ifstream(outp).rdbuf();
  se << std::ifstream(errp).rdbuf();
  r.out = so.str();
  r.err = se.str();
  return r;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_checks <path-to-hingecli>\n";
    return 2;
  }
  std::string cli = argv[1];
  fs::path dir = fs::temp_directory_path() / "hingecli_checks";
  fs::create_directories(dir);

  fs::path curve = dir / "diag_1_z.json";
  write_file(curve, R"({"n":2,"entries":[[[[0,"1"]],[]],[[],[[1,"1"]]]]})");

  {
    RunResult r = run(cli + " exponents -i " + curve.string());
    expect(r.status == 0, "exponents exits 0");
    json j = json::parse(r.out);
    expect(j["m"] == json::parse("[0,-1]") && j["k"] == json::parse("[0,-1]") &&
               j["alpha"] == json::parse("[1,1]"),
           "exponents values for diag(1,z)");
    RunResult again = run(cli + " exponents -i " + curve.string());
    expect(again.out == r.out, "byte-identical reruns");
  }
  {
    RunResult r = run("cat " + curve.string() + " | " + cli + " exponents");
    expect(r.status == 0 && json::parse(r.out)["m"] == json::parse("[0,-1]"),
           "stdin input");
  }
  {
    RunResult r = run(cli + " limit-hinge -i " + curve.string());
    expect(r.status == 0, "limit-hinge exits 0");
    json j = json::parse(r.out);
    Hinge h = hinge_from_json(j["hinge"]);
    expect(h.size() == 2, "limit hinge parses back with two terms");
  }
  {
    RunResult r = run(cli + " limit-glued -i " + curve.string());
    expect(r.status == 0, "limit-glued exits 0");
    GluedFamily f = glued_from_json(json::parse(r.out));
    expect(well_glued(f), "emitted glued family is well glued");
  }
  {
    RunResult urchin = run(cli + " urchin -i " + curve.string());
    expect(urchin.status == 0, "urchin exits 0");
    fs::path point = dir / "point.json";
    write_file(point, urchin.out);
    RunResult proj =
        run(cli + " project -i " + point.string() + " --signatures 1,0 1,1");
    expect(proj.status == 0, "project accepts the urchin output back");
    json j = json::parse(proj.out);
    expect(j["blocks"][1]["zeroed"] == json(true), "low-weight block is zeroed");
    RunResult proj2 =
        run(cli + " project -i " + curve.string() + " --signatures 1,0 1,1");
    expect(proj2.status == 0 && proj2.out == proj.out,
           "projecting the curve directly matches");
  }
  {
    // Singular graph: kernel/image chain cannot close up, exit 3.
    fs::path bad = dir / "bad_hinge.json";
    write_file(bad,
               R"({"n":2,"terms":[{"dim_v":2,"dim_w":2,)"
               R"("basis":[["1","0","0","0"],["0","1","0","0"]]}]})");
    RunResult r = run(cli + " hinge-check -i " + bad.string());
    expect(r.status == 3, "axiom failure exits 3");
    json j = json::parse(r.err);
    expect(j.contains("axiom") && j.contains("index"), "axiom error names the condition");
  }
  {
    fs::path good = dir / "good_hinge.json";
    write_file(good,
               R"({"n":2,"terms":[{"dim_v":2,"dim_w":2,)"
               R"("basis":[["1","0","1","0"],["0","1","0","1"]]}]})");
    RunResult r = run(cli + " hinge-check -i " + good.string());
    expect(r.status == 0, "valid hinge exits 0");
    RunResult mul = run(cli + " hinge-mul -a " + good.string() + " -b " + good.string());
    expect(mul.status == 0, "hinge-mul exits 0");
    GluedFamily f = glued_from_json(json::parse(mul.out));
    expect(f.blocks[1] == RationalMatrix::identity(2), "identity product blocks");
  }
  {
    RunResult r = run(cli + " exponents -i /nonexistent.json");
    expect(r.status == 2, "missing input exits 2");
    fs::path garbage = dir / "garbage.json";
    write_file(garbage, "{\"n\": 1, \"entries\": [[[[0,\"x\"]]]]}");
    RunResult r2 = run(cli + " exponents -i " + garbage.string());
    expect(r2.status == 2, "malformed rational exits 2");
  }
  {
    RunResult a = run(cli + " limit-glued --precision 6 -i " + curve.string());
    RunResult b = run(cli + " limit-glued --precision 11 -i " + curve.string());
    expect(a.status == 0 && a.out == b.out, "limits insensitive to precision bumps");
  }
  {
    RunResult r = run(cli + " factor -i " + curve.string());
    expect(r.status == 0, "factor exits 0");
    json j = json::parse(r.out);
    LaurentMatrix a = laurent_matrix_from_json(j["a"]);
    LaurentMatrix b = laurent_matrix_from_json(j["b"]);
    expect(a.coeff_matrix(0).det() != 0 && b.coeff_matrix(0).det() != 0,
           "factor jets invertible at 0");
  }
  {
    RunResult r = run(cli + " rep --signature 2,1,0");
    expect(r.status == 0 && json::parse(r.out)["dim"] == json(8),
           "rep dimension for signature 2,1,0");
  }
  {
    RunResult r = run(cli + " rep-limit -i " + curve.string() + " --signature 1,0");
    expect(r.status == 0, "rep-limit exits 0");
    json j = json::parse(r.out);
    expect(matrix_from_json(j["matrix"]) == RationalMatrix::from_ints({{1, 0}, {0, 0}}),
           "rep-limit value for the standard signature");
  }
  {
    fs::path other = dir / "diag_z_1.json";
    write_file(other, R"({"n":2,"entries":[[[[1,"1"]],[]],[[],[[0,"1"]]]]})");
    RunResult r = run(cli + " separate -a " + curve.string() + " -b " + other.string() +
                      " --spec 1,0");
    expect(r.status == 0 && json::parse(r.out)["separated"] == json(true),
           "distinct limits separated");
    RunResult r2 = run(cli + " separate -a " + curve.string() + " -b " + curve.string() +
                       " --spec 1,0 --spec \"2,0;1,1\"");
    expect(r2.status == 0 && json::parse(r2.out)["separated"] == json(false),
           "equal limits unseparated");
  }
  {
    RunResult r = run(cli + " selftest --seed 7 --trials 10");
    expect(r.status == 0, "selftest passes");
    RunResult t = run(cli + " --format text exponents -i " + curve.string());
    expect(t.status == 0 && t.out.find("m:") != std::string::npos, "text format renders");
  }
  {
    fs::path tricky = dir / "tricky.json";
    write_file(tricky,
               R"({"n":2,"entries":[[[[-3,"1"],[2,"1"]],[[-1,"2"]]],)"
               R"([[[-2,"3"]],[[-3,"1"],[1,"5"]]]]})");
    RunResult r = run(cli + " factor --precision 1 -i " + tricky.string());
    expect(r.status == 4, "starved precision exits 4");
    json j = json::parse(r.err);
    expect(j.contains("required_precision"), "precision error reports a retry value");
    RunResult env = run("HINGE_PRECISION=1 " + cli + " factor -i " + tricky.string());
    expect(env.status == 4, "environment precision override is honored");
    RunResult fine = run(cli + " factor -i " + tricky.string());
    expect(fine.status == 0, "default precision suffices");
  }

  std::cout << (failures == 0 ? "all cli checks passed\n" : "cli checks FAILED\n");
  return failures == 0 ? 0 : 1;
}
