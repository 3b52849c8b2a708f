#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "razavy/cli_ops.hpp"
#include "razavy/io.hpp"

using namespace razavy;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path = fs::temp_directory_path() /
           ("razavy_test_" + std::to_string(rng()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long newlines(const std::string& s) {
  return std::count(s.begin(), s.end(), '\n');
}

// every numeric value stored under "key" in a flat JSON dump
std::vector<double> json_numbers(const std::string& text,
                                 const std::string& key) {
  std::vector<double> out;
  const std::string needle = "\"" + key + "\":";
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    out.push_back(std::stod(text.substr(pos + needle.size())));
  }
  return out;
}

}  // namespace

TEST_CASE("numeric formatting is compact and deterministic") {
  CHECK(io::fmt9(1.0) == "1");
  CHECK(io::fmt9(0.0) == "0");
  CHECK(io::fmt9(0.1) == "0.1");
  CHECK(io::fmt9(-8.125) == "-8.125");
  CHECK(io::fmt9(1.0 / 3.0) == "0.333333333");
  CHECK(io::fmt9(1e-10) == "1e-10");
  CHECK(io::fmt9(123456789.0) == "123456789");
  CHECK(io::fmt9(1234567890.0) == "1.23456789e+09");
}

TEST_CASE("csv rows are plain comma joins") {
  CHECK(io::csv_row({"a", "b", "c"}) == "a,b,c\n");
  CHECK(io::csv_row({io::fmt9(0.5)}) == "0.5\n");
}

TEST_CASE("json writer emits exactly the expected document") {
  io::JsonWriter w;
  w.begin_object()
      .field("a", 1.5)
      .field("n", 7)
      .field("ok", true)
      .field("name", "razavy");
  w.begin_array("xs").element(1.0).element("two").end_array();
  w.begin_array("rows");
  for (int i = 0; i < 2; ++i) w.begin_object().field("i", i).end_object();
  w.end_array().end_object();
  CHECK(w.str() ==
        "{\"a\":1.5,\"n\":7,\"ok\":true,\"name\":\"razavy\","
        "\"xs\":[1,\"two\"],\"rows\":[{\"i\":0},{\"i\":1}]}");
}

TEST_CASE("config files parse with comments, blanks, and trimming") {
  TempDir dir;
  const fs::path ok = dir.path / "ok.cfg";
  io::write_file(ok.string(), "# heading\n  xi = 3.5 \n\nname=razavy\n");
  const std::map<std::string, std::string> kv = io::parse_config(ok.string());
  REQUIRE(kv.size() == 2);
  CHECK(kv.at("xi") == "3.5");
  CHECK(kv.at("name") == "razavy");

  const fs::path bad = dir.path / "bad.cfg";
  io::write_file(bad.string(), "# fine\nxi\n");
  try {
    io::parse_config(bad.string());
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }

  const fs::path nokey = dir.path / "nokey.cfg";
  io::write_file(nokey.string(), " =3\n");
  CHECK_THROWS_AS(io::parse_config(nokey.string()), std::invalid_argument);

  CHECK_THROWS_AS(io::parse_config((dir.path / "missing.cfg").string()),
                  std::invalid_argument);
}

TEST_CASE("config values fill in only parameters not set on the command line") {
  TempDir dir;
  const fs::path cfg = dir.path / "params.cfg";
  io::write_file(cfg.string(), "xi=1.5\nkappa=2.0\n");

  PotentialParams p;
  cli::apply_config_file(cfg.string(), p, {"xi"});
  CHECK(p.xi == 1.0);  // explicit flag wins
  CHECK(p.kappa == 2.0);

  PotentialParams q;
  cli::apply_config_file(cfg.string(), q, {});
  CHECK(q.xi == 1.5);

  const fs::path unknown = dir.path / "unknown.cfg";
  io::write_file(unknown.string(), "foo=1\n");
  PotentialParams r;
  CHECK_THROWS_AS(cli::apply_config_file(unknown.string(), r, {}),
                  std::invalid_argument);

  const fs::path invalid = dir.path / "invalid.cfg";
  io::write_file(invalid.string(), "xi=-1\n");
  PotentialParams v;
  CHECK_THROWS_AS(cli::apply_config_file(invalid.string(), v, {}),
                  std::invalid_argument);

  const fs::path garbled = dir.path / "garbled.cfg";
  io::write_file(garbled.string(), "kappa=abc\n");
  PotentialParams g;
  CHECK_THROWS_AS(cli::apply_config_file(garbled.string(), g, {}),
                  std::invalid_argument);
}

TEST_CASE("coupling lists and ranges parse, sort, and deduplicate") {
  const std::vector<double> list = cli::parse_g_spec("0.2,0.1,0.2");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == 0.1);
  CHECK(list[1] == 0.2);

  const std::vector<double> range = cli::parse_g_spec("0:0.2:5");
  REQUIRE(range.size() == 5);
  CHECK(range[0] == 0.0);
  CHECK(range[1] == 0.05);
  CHECK(range[4] == 0.2);

  for (const char* bad : {"0:0.2:1", "0.2:0:5", "-0.1,0.2", "abc", "0:0.1",
                          "0:0.1:2.5", "", "0.1,,0.2"}) {
    CHECK_THROWS_AS(cli::parse_g_spec(bad), std::invalid_argument);
  }
}

TEST_CASE("grid and coefficient specs parse strictly") {
  const Grid g = cli::parse_grid_spec("101,-3,3");
  CHECK(g.n == 101);
  CHECK(g.lo == -3.0);
  CHECK(g.hi == 3.0);
  CHECK_THROWS_AS(cli::parse_grid_spec("101.5,-3,3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid_spec("101,-3"), std::invalid_argument);

  const std::array<double, 4> a = cli::parse_coeffs("0.5,0.5,0.5,0.5");
  CHECK(a[0] == 0.5);
  CHECK(a[3] == 0.5);
  CHECK_THROWS_AS(cli::parse_coeffs("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_coeffs("a,b,c,d"), std::invalid_argument);
}

TEST_CASE("spectrum command writes the well summary and the level table") {
  TempDir dir;
  cli::GlobalOptions go;
  go.out_dir = dir.str();
  cli::SpectrumCmd cmd;
  cmd.g = {0.0, 0.1};
  CHECK(cli::cmd_spectrum(go, cmd) == 0);

  const std::string well = slurp(dir.path / "single_well.json");
  CHECK(well.find("\"gamma\":1.13822769") != std::string::npos);
  CHECK(well.find("\"v_barrier\":-2") != std::string::npos);

  const std::string csv = slurp(dir.path / "spectrum.csv");
  CHECK(csv.rfind("g,E0,E1,E2,E3,theta,omega1,omega2,omega3\n", 0) == 0);
  CHECK(csv.find("\n0.1,") != std::string::npos);
  CHECK(csv.find("0.491587469") != std::string::npos);
  CHECK(newlines(csv) == 3);

  TempDir jd;
  cli::GlobalOptions gj = go;
  gj.out_dir = jd.str();
  gj.format = "json";
  CHECK(cli::cmd_spectrum(gj, cmd) == 0);
  const std::string js = slurp(jd.path / "spectrum.json");
  CHECK(js.find("\"rows\":[") != std::string::npos);
  CHECK_FALSE(fs::exists(jd.path / "spectrum.csv"));

  cli::SpectrumCmd empty;
  CHECK_THROWS_AS(cli::cmd_spectrum(go, empty), std::invalid_argument);
}

TEST_CASE("dynamics command reports the twin packet and reruns bit-for-bit") {
  cli::GlobalOptions go;
  cli::DynamicsCmd cmd;
  cmd.packet = Wavepacket::from_preset(Preset::B);
  cmd.g = 0.1;
  cmd.t_max = 20.0;
  cmd.dt = 0.5;

  TempDir d1;
  go.out_dir = d1.str();
  CHECK(cli::cmd_dynamics(go, cmd) == 0);
  const std::string meta = slurp(d1.path / "dynamics.json");
  CHECK(meta.find("\"packet\":\"B\"") != std::string::npos);
  CHECK(meta.find("\"tau\":10.0907046,") != std::string::npos);
  CHECK(meta.find("\"tau_status\":\"exact\"") != std::string::npos);
  CHECK(meta.find("\"tau_method\":\"analytic\"") != std::string::npos);
  CHECK(meta.find("\"tau_ratio\":1,") != std::string::npos);
  const std::string csv = slurp(d1.path / "dynamics.csv");
  CHECK(csv.rfind("t,gamma,concurrence\n", 0) == 0);
  CHECK(newlines(csv) == 42);

  TempDir d2;
  cli::GlobalOptions go2 = go;
  go2.out_dir = d2.str();
  CHECK(cli::cmd_dynamics(go2, cmd) == 0);
  CHECK(slurp(d2.path / "dynamics.json") == meta);
  CHECK(slurp(d2.path / "dynamics.csv") == csv);

  cli::DynamicsCmd bad = cmd;
  bad.dt = 0.0;
  CHECK_THROWS_AS(cli::cmd_dynamics(go, bad), std::invalid_argument);
}

TEST_CASE("sweep command tabulates presets by coupling") {
  TempDir dir;
  cli::GlobalOptions go;
  go.out_dir = dir.str();
  cli::SweepCmd cmd;
  cmd.presets = {Preset::B, Preset::D};
  cmd.g = {0.0, 0.1};
  CHECK(cli::cmd_sweep(go, cmd) == 0);

  const std::string csv = slurp(dir.path / "sweep.csv");
  CHECK(csv.rfind("preset,g,theta,omega1,omega2,omega3,tau,tau_status,"
                  "tau_method,gamma_residual,tau_min,ratio,c0,c_av,"
                  "c_av_method,c_mean\n",
                  0) == 0);
  CHECK(newlines(csv) == 5);
  CHECK(csv.find("\nB,0,") != std::string::npos);
  CHECK(csv.find("\nD,0.1,") != std::string::npos);
  CHECK(csv.find("exact,analytic") != std::string::npos);
  CHECK(csv.find("closed_form") != std::string::npos);
  CHECK(csv.find("constant") != std::string::npos);

  cli::SweepCmd empty;
  CHECK_THROWS_AS(cli::cmd_sweep(go, empty), std::invalid_argument);
}

TEST_CASE("field command writes grid snapshots with unit norm") {
  TempDir dir;
  cli::GlobalOptions go;
  go.out_dir = dir.str();
  cli::FieldCmd cmd;
  cmd.packet = Wavepacket::from_preset(Preset::D);
  cmd.g = 0.1;
  cmd.times = {0.0, 5.5};
  cmd.grid = Grid{41, -3.0, 3.0};
  CHECK(cli::cmd_field(go, cmd) == 0);

  CHECK(fs::exists(dir.path / "field_000.csv"));
  CHECK(fs::exists(dir.path / "field_001.csv"));
  const std::string meta = slurp(dir.path / "field_meta.json");
  CHECK(meta.find("\"file\":\"field_000.csv\"") != std::string::npos);
  const std::vector<double> norms = json_numbers(meta, "norm");
  REQUIRE(norms.size() == 2);
  for (double n : norms) CHECK(std::abs(n - 1.0) < 5e-3);
  const std::vector<double> overlaps = json_numbers(meta, "overlap_mod_t0");
  REQUIRE(overlaps.size() == 2);
  CHECK(std::abs(overlaps[0] - 1.0) < 5e-3);
  CHECK(overlaps[1] <= 1.0 + 1e-9);

  const std::string csv = slurp(dir.path / "field_000.csv");
  CHECK(csv.rfind("x1,x2,re_psi,im_psi,density\n", 0) == 0);
  CHECK(newlines(csv) == 1 + 41 * 41);
}

TEST_CASE("field command scales snapshot times by the computed passage time") {
  TempDir dir;
  cli::GlobalOptions go;
  go.out_dir = dir.str();
  cli::FieldCmd cmd;
  cmd.packet = Wavepacket::from_preset(Preset::D);
  cmd.g = 0.1;
  cmd.tau_multiples = {1.0};
  cmd.grid = Grid{41, -3.0, 3.0};
  CHECK(cli::cmd_field(go, cmd) == 0);
  const std::string meta = slurp(dir.path / "field_meta.json");
  CHECK(meta.find("\"t\":11.0144797") != std::string::npos);

  cli::FieldCmd both = cmd;
  both.times = {1.0};
  CHECK_THROWS_AS(cli::cmd_field(go, both), std::invalid_argument);

  // a packet that never turns orthogonal cannot anchor tau multiples
  cli::FieldCmd never = cmd;
  never.packet =
      Wavepacket::custom({std::sqrt(0.9), std::sqrt(0.1), 0.0, 0.0});
  CHECK_THROWS_AS(cli::cmd_field(go, never), std::runtime_error);

  // with neither times nor multiples, the initial state is dumped
  TempDir d0;
  cli::GlobalOptions g0;
  g0.out_dir = d0.str();
  cli::FieldCmd plain;
  plain.packet = Wavepacket::from_preset(Preset::A);
  plain.g = 0.0;
  plain.grid = Grid{41, -3.0, 3.0};
  CHECK(cli::cmd_field(g0, plain) == 0);
  const std::string m0 = slurp(d0.path / "field_meta.json");
  CHECK(m0.find("\"t\":0,") != std::string::npos);
  CHECK_FALSE(fs::exists(d0.path / "field_001.csv"));
}
