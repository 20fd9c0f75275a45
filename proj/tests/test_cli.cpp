#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

// End-to-end checks of the command line: exit codes per command and
// byte-identical output on reruns.

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(MAGMOID_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WEXITSTATUS(status);
  return r;
}

std::string inst(const std::string& name) {
  return std::string(MAGMOID_INSTANCE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("check passes on every shipped instance") {
  for (const char* f : {"finset.json", "fininj.json", "smash.json", "pointed_bot.json",
                        "slice.json", "cosemigroup.json", "ordered_magma.json"}) {
    CAPTURE(f);
    RunResult r = run("check " + inst(f));
    CHECK(r.code == 0);
    CHECK(r.out.find("result: VERIFIED") != std::string::npos);
  }
}

TEST_CASE("fixpoint --search on the or-instance prints a0 and c") {
  RunResult r = run("fixpoint " + inst("finset.json") +
                    " --A A --C C --F F_or --sigma sigma_one --search");
  CHECK(r.code == 0);
  CHECK(r.out.find("a0: t -> A {*->1}") != std::string::npos);
  CHECK(r.out.find("c: t -> C {*->1}") != std::string::npos);
}

TEST_CASE("fixpoint --search against a t-free sigma reports NotFound") {
  RunResult r = run("fixpoint " + inst("finset.json") +
                    " --A A --C C --F F_or --sigma sigma_swap --search");
  CHECK(r.code == 1);
  CHECK(r.out.find("NotFound") != std::string::npos);
}

TEST_CASE("diagonal on the or-instance and on the injections instance") {
  RunResult r1 = run("diagonal " + inst("finset.json") +
                     " --A A --C C --F F_or --sigma sigma_swap");
  CHECK(r1.code == 0);
  CHECK(r1.out.find("verified: yes") != std::string::npos);

  RunResult r2 = run("diagonal " + inst("fininj.json") +
                     " --A A --C C4 --F F_pair --sigma sigma_cycle");
  CHECK(r2.code == 0);

  // sigma with a fixed point: the precondition fails with a witness
  RunResult r3 = run("diagonal " + inst("finset.json") +
                     " --A A --C C --F F_or --sigma sigma_one");
  CHECK(r3.code == 1);
  CHECK(r3.out.find("not t-free") != std::string::npos);
}

TEST_CASE("fixpoint-regular on the or-instance with the two-point t'") {
  RunResult r = run("fixpoint-regular " + inst("finset.json") +
                    " --A A --C C --F F_or --sigma sigma_one --tprime t2 --a0 a0_pair");
  CHECK(r.code == 0);
  CHECK(r.out.find("conclusion sigma.c=c: ok") != std::string::npos);
}

TEST_CASE("quotient and points") {
  RunResult q = run("quotient " + inst("smash.json"));
  CHECK(q.code == 0);
  CHECK(q.out.find("result: VERIFIED") != std::string::npos);

  RunResult p = run("points " + inst("finset.json") + " --object A");
  CHECK(p.code == 0);
  CHECK(p.out.find("t-points of A: 2") != std::string::npos);

  RunResult prod = run("points " + inst("finset.json") + " --object A#A");
  CHECK(prod.code == 0);
  CHECK(prod.out.find("t-points of (A#A): 4") != std::string::npos);
}

TEST_CASE("hom-check certifies the closed variants") {
  RunResult r1 = run("hom-check " + inst("finset.json") + " --X A --Y C");
  CHECK(r1.code == 0);
  CHECK(r1.out.find("result: VERIFIED") != std::string::npos);

  RunResult r2 = run("hom-check " + inst("pointed_bot.json") + " --X X2 --Y Y2");
  CHECK(r2.code == 0);
  CHECK(r2.out.find("(4 elements)") != std::string::npos);

  RunResult r3 = run("hom-check " + inst("slice.json") + " --X B --Y A");
  CHECK(r3.code == 0);

  // smash has no hom recipe
  RunResult r4 = run("hom-check " + inst("smash.json") + " --X X2 --Y Y3");
  CHECK(r4.code == 3);
}

TEST_CASE("uniform-fix on the degenerate pointed instance") {
  RunResult r = run("uniform-fix " + inst("pointed_bot.json") +
                    " --p p_id --s p_id --F F_pt --idx idx_pt");
  CHECK(r.code == 0);
  CHECK(r.out.find("fixed-point square: ok") != std::string::npos);
}

TEST_CASE("comb commands and their exit codes") {
  RunResult fpc = run("comb fpc \"B(WW)((BW)((BB)B))\"");
  CHECK(fpc.code == 0);
  CHECK(fpc.out.find("Verified") != std::string::npos);

  RunResult basis = run("comb basis \"B(WW)((BW)((BB)B))\"");
  CHECK(basis.code == 0);
  CHECK(basis.out.find("constants: {BW}") != std::string::npos);
  CHECK(basis.out.find("FL_c") != std::string::npos);

  RunResult red = run("comb reduce \"B x y z\"");
  CHECK(red.code == 0);
  CHECK(red.out.find("x (y z)") != std::string::npos);

  // a diverging term exhausts its fuel: inconclusive
  RunResult div = run("--fuel 20 comb reduce \"B(WW)((BW)((BB)B)) x\"");
  CHECK(div.code == 2);

  RunResult join = run("comb join \"K x y\" \"x\"");
  CHECK(join.code == 0);

  RunResult nb = run("comb join \"x\" \"y\"");
  CHECK(nb.code == 2);
  CHECK(nb.out.find("NotWithinBudget") != std::string::npos);

  RunResult syn = run("comb reduce \"(\"");
  CHECK(syn.code == 3);
}

TEST_CASE("malformed instance files exit 3") {
  std::string bad = std::string(MAGMOID_INSTANCE_DIR) + "/../build/bad_instance.json";
  {
    std::ofstream f(bad);
    f << "{ not json";
  }
  RunResult r = run("check " + bad);
  CHECK(r.code == 3);

  RunResult missing = run("check /nonexistent/file.json");
  CHECK(missing.code == 3);

  RunResult unknown = run("fixpoint " + inst("finset.json") +
                          " --A A --C C --F nosuch --sigma sigma_one --search");
  CHECK(unknown.code == 3);
}

TEST_CASE("byte-identical output for identical invocations") {
  std::vector<std::string> invocations = {
      "check " + inst("finset.json"), "quotient " + inst("smash.json"),
      "comb fpc \"B(WW)((BW)((BB)B))\"",
      "--format structured check " + inst("slice.json")};
  for (const std::string& args : invocations) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("structured output is valid JSON with the verdict") {
  RunResult r = run("--format structured fixpoint " + inst("finset.json") +
                    " --A A --C C --F F_or --sigma sigma_one --search");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verified\": true") != std::string::npos);
}

TEST_CASE("file-supplied hom candidates are used") {
  std::string path = std::string(MAGMOID_INSTANCE_DIR) + "/../build/hom_candidate.json";
  {
    std::ofstream f(path);
    f << R"json({
      "variant": "finset",
      "t": "t",
      "objects": [
        {"name": "t", "elements": ["*"]},
        {"name": "C", "elements": ["0", "1"]}
      ],
      "hom_candidates": [
        {"X": "t", "Y": "C",
         "object": {"name": "H", "elements": ["h0", "h1"]},
         "ev": {"map": {"(h0,*)": "0", "(h1,*)": "1"}}}
      ]
    })json";
  }
  RunResult r = run("hom-check " + path + " --X t --Y C");
  CHECK(r.code == 0);
  CHECK(r.out.find("H (2 elements)") != std::string::npos);

  // and a wrong candidate is a failed check
  std::string bad = std::string(MAGMOID_INSTANCE_DIR) + "/../build/hom_bad.json";
  {
    std::ofstream f(bad);
    f << R"json({
      "variant": "finset",
      "t": "t",
      "objects": [
        {"name": "t", "elements": ["*"]},
        {"name": "C", "elements": ["0", "1"]}
      ],
      "hom_candidates": [
        {"X": "t", "Y": "C",
         "object": {"name": "H", "elements": ["h0"]},
         "ev": {"map": {"(h0,*)": "0"}}}
      ]
    })json";
  }
  RunResult rb = run("hom-check " + bad + " --X t --Y C");
  CHECK(rb.code == 1);
  CHECK(rb.out.find("check failed") != std::string::npos);
}

TEST_CASE("a starved budget maps to the inconclusive exit code") {
  RunResult r = run("--budget 2 check " + inst("finset.json"));
  CHECK(r.code == 2);
  CHECK(r.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("probe sets can be restricted to a list") {
  RunResult r = run("--probe-set list:t,A hom-check " + inst("finset.json") + " --X A --Y C");
  CHECK(r.code == 0);
  CHECK(r.out.find("probe t") != std::string::npos);
  CHECK(r.out.find("probe A") != std::string::npos);
  CHECK(r.out.find("probe B3") == std::string::npos);
}

TEST_CASE("section-variant commands run from the file") {
  RunResult d = run("diagonal " + inst("finset.json") +
                    " --section --p p_BA --s s_AB --F F_sect --sigma sigma_swap");
  CHECK(d.code == 0);

  RunResult f = run("fixpoint " + inst("finset.json") +
                    " --section --p p_BA --F F_sect --sigma sigma_one --a0 a0_one");
  CHECK(f.code == 0);
  CHECK(f.out.find("point-surjective") != std::string::npos);
}

TEST_CASE("crisp uniform fix through the trivializing flat") {
  RunResult r = run("uniform-fix " + inst("pointed_bot.json") +
                    " --p p_id --s s_crisp --F F_pt --idx idx_pt --crisp section");
  CHECK(r.code == 0);
  CHECK(r.out.find("crisp_section") != std::string::npos);

  RunResult ri = run("uniform-fix " + inst("pointed_bot.json") +
                     " --p p_id --s s_crisp --F F_pt --idx idx_plain --crisp index");
  CHECK(ri.code == 3); // idx_plain is not defined in the file
}
