// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool. Each case shells out to the
// real binary (path injected by the build) inside a scratch directory.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "falqon/trace_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kScratch = fs::temp_directory_path() / "falqon-cli-tests";

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FALQON_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) { return falqon::read_text_file(p.string()); }

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

struct ScratchDir {
  fs::path dir;
  explicit ScratchDir(const std::string& name) : dir(kScratch / name) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
};

}  // namespace

TEST_CASE("generate writes a corpus with a manifest") {
  ScratchDir scratch("gen");
  const std::string out = (scratch.dir / "k4").string();
  CHECK(run_cli("generate --n 4 --d 3 --count 1 --seed 3 --out " + out) == 0);

  const json manifest = json::parse(slurp(fs::path(out) / "manifest.json"));
  REQUIRE(manifest.at("instances").size() == 1);
  CHECK(manifest.at("complete").get<bool>());
  const json inst = json::parse(
      slurp(fs::path(out) / manifest.at("instances")[0].get<std::string>()));
  CHECK(inst.at("n") == 4);
  CHECK(inst.at("edges").size() == 6);  // K4

  // Refusing to clobber a non-empty directory without --force.
  CHECK(run_cli("generate --n 4 --d 3 --count 1 --seed 3 --out " + out) == 2);
  CHECK(run_cli("generate --n 4 --d 3 --count 1 --seed 3 --force --out " + out) == 0);
}

TEST_CASE("regenerating with the same parameters is byte-identical") {
  ScratchDir scratch("gen-repro");
  const std::string out1 = (scratch.dir / "a").string();
  const std::string out2 = (scratch.dir / "b").string();
  const std::string flags = "generate --n 10 --d 3 --count 3 --seed 13 --weighted --out ";
  CHECK(run_cli(flags + out1) == 0);
  CHECK(run_cli(flags + out2) == 0);
  CHECK(slurp(fs::path(out1) / "manifest.json") == slurp(fs::path(out2) / "manifest.json"));
  const json manifest = json::parse(slurp(fs::path(out1) / "manifest.json"));
  for (const auto& rel : manifest.at("instances")) {
    const std::string r = rel.get<std::string>();
    CHECK(slurp(fs::path(out1) / r) == slurp(fs::path(out2) / r));
  }
}

TEST_CASE("config file supplies flags, command line overrides") {
  ScratchDir scratch("config");
  const std::string inst = (scratch.dir / "path3.json").string();
  falqon::write_text_file(inst,
                          R"({"name":"path3","n":3,"edges":[[0,1,1.0],[1,2,1.0]]})");
  const std::string conf = (scratch.dir / "fig2.toml").string();
  falqon::write_text_file(conf, "[run]\ndt = 0.2\nlayers = 10\nseed = 11\n");

  const std::string out1 = (scratch.dir / "from-config").string();
  CHECK(run_cli("--config " + conf + " run " + inst + " --out " + out1) == 0);
  const json meta1 = json::parse(slurp(fs::path(out1) / "meta.json"));
  CHECK(meta1.at("config").at("dt") == doctest::Approx(0.2));
  CHECK(meta1.at("result").at("layers_executed") == 10);

  const std::string out2 = (scratch.dir / "overridden").string();
  CHECK(run_cli("--config " + conf + " run " + inst + " --layers 4 --out " + out2) == 0);
  const json meta2 = json::parse(slurp(fs::path(out2) / "meta.json"));
  CHECK(meta2.at("result").at("layers_executed") == 4);
}

TEST_CASE("generate rejects infeasible parameters with a usage error") {
  ScratchDir scratch("gen-bad");
  const std::string out = (scratch.dir / "bad").string();
  CHECK(run_cli("generate --n 5 --d 3 --out " + out) == 1);   // parity
  CHECK(run_cli("generate --n 4 --d 9 --out " + out) == 1);   // d >= n
  CHECK(run_cli("generate --n 4 --d 3") == 1);                // missing --out
}

TEST_CASE("run produces a deterministic trace with one row per layer") {
  ScratchDir scratch("run");
  const std::string inst = (scratch.dir / "path3.json").string();
  falqon::write_text_file(inst,
                          R"({"name":"path3","n":3,"edges":[[0,1,1.0],[1,2,1.0]]})");

  const std::string out1 = (scratch.dir / "a").string();
  const std::string out2 = (scratch.dir / "b").string();
  const std::string flags = " --dt 0.2 --layers 10 --seed 11 --out ";
  CHECK(run_cli("run " + inst + flags + out1) == 0);
  CHECK(run_cli("run " + inst + flags + out2) == 0);

  const std::string trace = slurp(fs::path(out1) / "trace.csv");
  CHECK(trace == slurp(fs::path(out2) / "trace.csv"));  // byte-identical
  CHECK(count_lines(trace) == 1 + 10);                  // header + one row per layer

  const json meta = json::parse(slurp(fs::path(out1) / "meta.json"));
  CHECK(meta.at("result").at("layers_executed") == 10);
  CHECK(meta.at("config").at("tau") == doctest::Approx(0.4));
  CHECK(meta.at("initial").at("energy") == doctest::Approx(-1.0));
  CHECK(meta.at("trace_schema_version") == falqon::kTraceSchemaVersion);
}

TEST_CASE("run on an edgeless instance keeps beta at zero") {
  ScratchDir scratch("run-empty");
  const std::string inst = (scratch.dir / "empty.json").string();
  falqon::write_text_file(inst, R"({"name":"empty","n":3,"edges":[]})");
  const std::string out = (scratch.dir / "out").string();
  CHECK(run_cli("run " + inst + " --dt 0.2 --layers 10 --out " + out) == 0);

  std::istringstream trace(slurp(fs::path(out) / "trace.csv"));
  std::string line;
  std::getline(trace, line);  // header
  while (std::getline(trace, line)) {
    const auto first_comma = line.find(',');
    const auto second_comma = line.find(',', first_comma + 1);
    CHECK(line.substr(first_comma + 1, second_comma - first_comma - 1) == "0");
  }
}

TEST_CASE("run errors on a malformed instance") {
  ScratchDir scratch("run-bad");
  const std::string inst = (scratch.dir / "bad.json").string();
  falqon::write_text_file(inst, R"({"name":"bad","n":3,"edges":[[3,3,1.0]]})");
  CHECK(run_cli("run " + inst + " --dt 0.2 --layers 5") == 2);
  CHECK(run_cli("run " + (scratch.dir / "missing.json").string() + " --dt 0.2 --layers 5") ==
        2);
  // Flag-level mistakes are usage errors, caught before any file is read.
  CHECK(run_cli("run " + inst + " --dt 0.2 --layers 5 --estimator shots:nope") == 1);
  CHECK(run_cli("run " + inst + " --dt 0.2 --layers 5 --variant bogus") == 1);
}

TEST_CASE("iterative variant writes one trace per pass") {
  ScratchDir scratch("run-iter");
  const std::string inst = (scratch.dir / "g.json").string();
  const std::string gen_out = (scratch.dir / "gen").string();
  CHECK(run_cli("generate --n 8 --d 4 --weighted --count 1 --seed 7 --out " + gen_out) == 0);
  const json manifest = json::parse(slurp(fs::path(gen_out) / "manifest.json"));
  const std::string gpath =
      (fs::path(gen_out) / manifest.at("instances")[0].get<std::string>()).string();

  const std::string out = (scratch.dir / "iter").string();
  CHECK(run_cli("run " + gpath + " --dt 0.08 --layers 120 --variant iterative --iters 3 --out " +
                out) == 0);
  CHECK(fs::exists(fs::path(out) / "trace_iter0.csv"));
  CHECK(fs::exists(fs::path(out) / "trace_iter1.csv"));
  CHECK(fs::exists(fs::path(out) / "trace_iter2.csv"));
  const json summary = json::parse(slurp(fs::path(out) / "iterative.json"));
  CHECK(summary.at("passes") == 3);
  CHECK(summary.at("final_energies").size() == 3);
}

TEST_CASE("sweep and cost round trip") {
  ScratchDir scratch("sweep");
  const std::string corpus = (scratch.dir / "n6").string();
  CHECK(run_cli("generate --n 6 --d 3 --all --out " + corpus) == 0);

  const std::string dtc = (scratch.dir / "dtc.json").string();
  CHECK(run_cli("sweep dtc --corpus " + corpus + " --layers 60 --out " + dtc) == 0);
  const json dtc_report = json::parse(slurp(dtc));
  CHECK(dtc_report.at("dt_c").get<double>() > 0.0);
  CHECK(dtc_report.at("instances") == 2);

  const std::string thr = (scratch.dir / "thr.json").string();
  const std::string agg = (scratch.dir / "agg.csv").string();
  CHECK(run_cli("sweep thresholds --corpus " + corpus + " --dtc-report " + dtc +
                " --layers 200 --out " + thr + " --aggregate " + agg) == 0);
  const json thr_report = json::parse(slurp(thr));
  CHECK(thr_report.at("per_instance").size() == 2);
  CHECK(thr_report.at("thresholds").at("r_A") == doctest::Approx(0.932));
  CHECK(count_lines(slurp(agg)) == 1 + 200);

  // Shot-mode run, then the cost command over its output directory.
  const json manifest = json::parse(slurp(fs::path(corpus) / "manifest.json"));
  const std::string gpath =
      (fs::path(corpus) / manifest.at("instances")[0].get<std::string>()).string();
  const std::string rundir = (scratch.dir / "shotrun").string();
  CHECK(run_cli("run " + gpath + " --dt 0.03 --layers 10 --estimator shots:64 --stop-eps 0 " +
                "--out " + rundir) == 0);
  const std::string costfile = (scratch.dir / "cost.json").string();
  CHECK(run_cli("cost " + rundir + " --out " + costfile) == 0);
  const json cost = json::parse(slurp(costfile));
  CHECK(cost.at("identity_ok").get<bool>());
  CHECK(cost.at("commutator_samples") == 64 * (2 * 9) * 10);
  CHECK(cost.at("degree") == 3);
  CHECK(cost.at("strings_per_layer") == 18);
  CHECK(cost.at("string_bound_n_n_minus_1") == 30);
}

TEST_CASE("sweep thresholds records rejected instances") {
  ScratchDir scratch("sweep-reject");
  const std::string corpus = (scratch.dir / "mix").string();
  fs::create_directories(corpus);
  falqon::write_text_file((fs::path(corpus) / "path3.json").string(),
                          R"({"name":"path3","n":3,"edges":[[0,1,1.0],[1,2,1.0]]})");
  falqon::write_text_file((fs::path(corpus) / "empty.json").string(),
                          R"({"name":"empty","n":3,"edges":[]})");

  const std::string thr = (scratch.dir / "thr.json").string();
  CHECK(run_cli("sweep thresholds --corpus " + corpus + " --dt 0.2 --layers 50 --out " + thr) ==
        0);
  const json report = json::parse(slurp(thr));
  CHECK(report.at("rejected").size() == 1);
  CHECK(report.at("per_instance").size() == 1);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("") == 1);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("run") == 1);  // missing arguments
  CHECK(run_cli("--help") == 0);
}
