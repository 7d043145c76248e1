#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(GEQ_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("group validate") {
  const auto r = run("group validate " + data("z2.grp"));
  CHECK(r.code == 0);
  CHECK(r.out == "GROUP Z2\nORDER 2\nGENERATORS a\n");
  CHECK(run("group validate /nonexistent.grp").code == 3);

  const auto bad = std::filesystem::temp_directory_path() / "geq_cli_bad.grp";
  std::ofstream(bad) << "group Z3\nelements e a b\nidentity e\ntable\ne: e a b\na: a b e\nb: b e a\ngenerators a\n";
  CHECK(run("group validate " + bad.string()).code == 3);
}

TEST_CASE("eq solve") {
  const auto both = run("eq solve --group " + data("z2.grp") + " --arity 1 --method both \"a x1\"");
  CHECK(both.code == 0);
  CHECK(both.out == "MEMBER yes\nWITNESS x1=a\n");

  const auto dfa = run("eq solve --group " + data("z2.grp") + " --arity 1 --method dfa \"a\"");
  CHECK(dfa.code == 1);
  CHECK(dfa.out == "MEMBER no\n");

  CHECK(run("eq solve --group " + data("z2.grp") + " --arity 1 --method brute \"x1 x1\"").out ==
        "MEMBER yes\nWITNESS x1=e\n");
  CHECK(run("eq solve --group " + data("z2.grp") + " --arity 1 \"x2\"").code == 3);
  CHECK(run("eq solve --group " + data("z2.grp") + " --arity 1 --method magic \"a\"").code == 3);
  CHECK(run("eq solve --group " + data("z6.grp") + " --arity 9 --method dfa \"x1\"").code == 2);
}

TEST_CASE("eq build-dfa") {
  const auto table = run("eq build-dfa --group " + data("z2.grp") + " --arity 1 --format table");
  CHECK(table.code == 0);
  CHECK(table.out ==
        "STATES 4\nACCEPTING 3\n"
        "state\ta\tx1\tx1^-1\taccepting\n"
        "0\t1\t2\t2\t1\n"
        "1\t0\t3\t3\t0\n"
        "2\t3\t0\t0\t1\n"
        "3\t2\t1\t1\t1\n");

  const auto min = run("eq build-dfa --group " + data("z5.grp") + " --arity 0 --minimize");
  CHECK(min.out.starts_with("STATES 5\n"));

  const auto path = std::filesystem::temp_directory_path() / "geq_cli_dfa.dot";
  const auto to_file = run("eq build-dfa --group " + data("z2.grp") + " --arity 0 -o " + path.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out == "STATES 2\nACCEPTING 1\nOUTPUT " + path.string() + "\n");
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "digraph dfa {");

  CHECK(run("eq build-dfa --group " + data("z3.grp") + " --arity 2 --limit 5").code == 2);
  CHECK(run("eq build-dfa --group " + data("z2.grp") + " --arity 1 --format svg").code == 3);

  // Byte-deterministic output.
  const auto again = run("eq build-dfa --group " + data("s3.grp") + " --arity 1 --minimize");
  CHECK(again.out == run("eq build-dfa --group " + data("s3.grp") + " --arity 1 --minimize").out);
}

TEST_CASE("eq enumerate") {
  const auto r = run("eq enumerate --group " + data("z2.grp") + " --arity 1 --maxlen 1");
  CHECK(r.code == 0);
  CHECK(r.out == "\nx1\nx1^-1\n");
}

TEST_CASE("eq dovetail") {
  const auto r = run("eq dovetail --oracle free:c --arity 1 --max-steps 8 \"x1 x1 c^-1 c^-1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "SOLVED m=4\nWITNESS x1=\"c\"\n");

  const auto ex = run("eq dovetail --oracle free:2 --arity 1 --max-steps 3 \"a\"");
  CHECK(ex.code == 2);
  CHECK(ex.out == "EXHAUSTED max_steps=3\n");

  const auto fin = run("eq dovetail --oracle group:" + data("z3.grp") + " --arity 1 --max-steps 4 \"a x1\"");
  CHECK(fin.code == 0);
  CHECK(fin.out == "SOLVED m=2\nWITNESS x1=\"a2\"\n");
  CHECK(run("eq dovetail --oracle tape:3 --arity 1 \"a\"").code == 3);
}

TEST_CASE("cfl pump") {
  const auto r = run("cfl pump --set integers --p 2 --auto-witness --tmax 2");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("SET integers\nWITNESS M=3 N=1 epsilon=1/1 n=17 word=a^51 b^17\nu=[0,0)"));
  CHECK(r.out.ends_with("REFUTED p=2\n"));

  const auto ctl = run("cfl pump --set all --p 2 --word aabb");
  CHECK(ctl.code == 1);
  CHECK(ctl.out.ends_with("NOT-REFUTED\n"));

  const auto q = run("cfl pump --set list:1/1 --p 1 --word aabb --quiet");
  CHECK(q.code == 0);
  CHECK(q.out == "SET list:1/1\nDECOMPOSITIONS 8\nREFUTED p=1\n");

  CHECK(run("cfl pump --set all --p 1 --word ab --quiet").code == 1);
  CHECK(run("cfl pump --set all --p 1 --word ab --quiet --allow-t0").code == 0);
  CHECK(run("cfl pump --set integers --p 2 --word aaabb").code == 3);
  CHECK(run("cfl pump --set integers --p 2").code == 3);
}

TEST_CASE("cfl demo-z") {
  const auto r = run("cfl demo-z --max-m 6 --max-n 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("PAIR m=6 n=3\n") != std::string::npos);
  CHECK(r.out.find("PAIR m=5 n=3\n") == std::string::npos);
  CHECK(r.out.ends_with("MISMATCHES 0\n"));
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 3);
  CHECK(run("eq").code == 3);
  CHECK(run("--help").code == 0);
}
