#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "stbcsm/csv.hpp"

namespace fs = std::filesystem;
using stbcsm::cli::run_cli;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("stbcsm_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

const char* kConfig = "scheme = SM\nn_t = 2\nn_r = 4\nsnr_grid = 0,4\nmax_bits = 1e5\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("run writes one row per grid point") {
    TempDir tmp;
    write(tmp.file("a.cfg"), kConfig);
    const auto r = cli({"run", "--config", tmp.file("a.cfg"), "--out", tmp.file("a.csv")});
    CHECK(r.code == 0);
    std::istringstream in(slurp(tmp.file("a.csv")));
    std::string line;
    int lines = 0;
    std::getline(in, line);
    CHECK(line == stbcsm::kCsvHeader);
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 2);
  }

  TEST_CASE("seed override matches the config seed") {
    TempDir tmp;
    write(tmp.file("a.cfg"), kConfig);
    write(tmp.file("b.cfg"), std::string(kConfig) + "master_seed = 42\n");
    CHECK(cli({"run", "--config", tmp.file("a.cfg"), "--seed", "42", "--out", tmp.file("s42.csv")}).code == 0);
    CHECK(cli({"run", "--config", tmp.file("a.cfg"), "--seed", "43", "--out", tmp.file("s43.csv")}).code == 0);
    CHECK(cli({"run", "--config", tmp.file("b.cfg"), "--out", tmp.file("f42.csv"), "--workers", "4"}).code == 0);
    CHECK(slurp(tmp.file("s42.csv")) == slurp(tmp.file("f42.csv")));
    CHECK(slurp(tmp.file("s42.csv")) != slurp(tmp.file("s43.csv")));
  }

  TEST_CASE("set overrides keys") {
    TempDir tmp;
    write(tmp.file("a.cfg"), kConfig);
    CHECK(cli({"run", "--config", tmp.file("a.cfg"), "--set", "snr_grid=1", "--set", "scheme=VBLAST", "--out",
               tmp.file("o.csv")})
              .code == 0);
    CHECK(slurp(tmp.file("o.csv")).find("\nVBLAST,plain,2,4,BPSK,1,") != std::string::npos);
  }

  TEST_CASE("config errors exit with 2 and name the problem") {
    TempDir tmp;
    write(tmp.file("bad.cfg"), std::string(kConfig) + "colour = blue\n");
    auto r = cli({"run", "--config", tmp.file("bad.cfg"), "--out", tmp.file("x.csv")});
    CHECK(r.code == 2);
    CHECK(r.err.find("colour") != std::string::npos);
    CHECK(!fs::exists(tmp.file("x.csv")));
    r = cli({"run", "--config", tmp.file("missing.cfg")});
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot read") != std::string::npos);
    write(tmp.file("val.cfg"), std::string(kConfig) + "n_r = many\n");
    r = cli({"run", "--config", tmp.file("val.cfg")});
    CHECK(r.code == 2);
    CHECK(r.err.find("many") != std::string::npos);
    CHECK(cli({"figure", "fig9"}).code == 2);
    CHECK(cli({"optimize-theta", "--modulation", "7PSK"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
  }

  TEST_CASE("runtime errors exit with 3") {
    TempDir tmp;
    write(tmp.file("a.cfg"), kConfig);
    const auto r = cli({"run", "--config", tmp.file("a.cfg"), "--out", tmp.file("no/such/dir/x.csv")});
    CHECK(r.code == 3);
  }

  TEST_CASE("optimize-theta") {
    auto r = cli({"optimize-theta", "--n-t", "4", "--modulation", "BPSK", "--grid-step", "0.001"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theta = 1.571") != std::string::npos);
    CHECK(r.out.find("min_cgd = 12") != std::string::npos);
    r = cli({"optimize-theta", "--n-t", "4", "--theta", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("min_cgd = 0\n") != std::string::npos);
  }

  TEST_CASE("figure writes one csv") {
    TempDir tmp;
    const auto r = cli({"figure", "fig6", "--out", tmp.path.string(), "--set", "max_bits=2e4"});
    CHECK(r.code == 0);
    std::istringstream in(slurp(tmp.file("fig6.csv")));
    const auto recs = stbcsm::read_csv(in);
    CHECK(recs.size() == 32);
    for (const auto& rec : recs) CHECK(rec.snr_db == -5.0);
    CHECK(cli({"figure", "fig6", "--out", tmp.path.string(), "--set", "L=0"}).code == 2);
  }
}
