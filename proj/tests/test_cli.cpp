#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("'") + DACOX_CLI + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST_CASE("verify") {
  CHECK(cli("verify --family dddotC --rank 2 --suite all").code == 0);
  CHECK(cli("verify --family dddotQ --rank 2").code == 2);
  CHECK(cli("verify --family dddotA --rank 2 --suite nope").code == 2);
  CHECK(cli("verify --family dddotE --rank 7").code == 2);
  const auto a = cli("verify --family dddotA --rank 2 --suite appendixA");
  CHECK(a.code == 0);
  CHECK(has(a, "SKIP"));
}

TEST_CASE("verify --json is deterministic") {
  const auto x = cli("verify --family ddotG2 --rank 2 --json");
  const auto y = cli("verify --family ddotG2 --rank 2 --json");
  CHECK(x.code == 0);
  CHECK(x.out == y.out);
  CHECK(has(x, "\"suite\": \"auto\""));
}

TEST_CASE("decompose") {
  auto r = cli("decompose --matrix '1,0;0,1'");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("\n", 0) == 0);  // empty word
  r = cli("decompose --matrix '0,-1;1,0' --level 1");
  CHECK(r.out.rfind("A B A\n", 0) == 0);
  CHECK(cli("decompose --matrix '1,0;1,1' --level 2").code == 1);
  CHECK(cli("decompose --matrix x").code == 2);
  r = cli("decompose --matrix '1,2;2,5' --prime --json");
  CHECK(r.code == 0);
  CHECK(has(r, "\"round_trip\": true"));
}

TEST_CASE("involution") {
  CHECK(has(cli("involution --matrix '1,1;-2,-1' --family ddotB --rank 3"), "member: yes  involution: yes"));
  CHECK(has(cli("involution --matrix '1,0;4,1' --family ddotB --rank 3"), "member: no  involution: no"));
  CHECK(has(cli("involution --matrix '1,0;0,1' --family ddotG2 --rank 2"), "member: yes  involution: yes"));
  CHECK(cli("involution --matrix '1,0;1,1' --family ddotB --rank 3").code == 1);
}

TEST_CASE("params, nf, diagram, rootsys, cosets") {
  CHECK(has(cli("params --system '(Cn^,Cn)' --n 2 --json"), "\"final_count\": 5"));
  CHECK(has(cli("params --family dddotC --rank 2 --json"), "\"generic_count\": 5"));
  CHECK(cli("params --system 'Q9^(7)'").code == 2);
  const auto nf = cli("nf --family dddotC --rank 2 --word C");
  CHECK(nf.out == "w=[] mu=[0,0] beta=[0,0] k=1\n");
  CHECK(cli("nf --family dddotC --rank 2 --word 'T7'").code == 2);
  const auto d1 = cli("diagram --family ddotG2 --dot"), d2 = cli("diagram --family ddotG2 --dot");
  CHECK(d1.code == 0);
  CHECK(d1.out == d2.out);
  CHECK(has(cli("rootsys --type 'A4^(2)'"), "\"A4^(2)\""));
  CHECK(has(cli("cosets --level 3"), "index 8"));
}

TEST_CASE("autocheck") {
  CHECK(cli("autocheck --family ddotG2 --rank 2").code == 0);
  CHECK(has(cli("autocheck --family dddotA --rank 2 --matrix '1,0;0,1' --json"), "\"failed\": 0"));
}
