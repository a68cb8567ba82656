#include "doctest.h"
#include "galscaf/job.hpp"

using namespace galscaf;
using nlohmann::json;

namespace {

const char* kAnalyzeP3 = R"({
  "task": "analyze",
  "cap": 64,
  "extension": {"p": 3, "m": 1, "n": 1, "e": [1], "u": [[[0, 1]]]}
})";

}  // namespace

TEST_CASE("config parsing rejects garbage and unknown fields") {
  CHECK_THROWS_AS(JobConfig::from_string("{not json"), InvalidInput);
  CHECK_THROWS_AS(JobConfig::from_string(R"({"task":"analyze"})"), InvalidInput);
  CHECK_THROWS_AS(
      JobConfig::from_string(
          R"({"task":"analyze","surprise":1,"extension":{"p":3,"n":1,"e":[1],"u":[[[0,1]]]}})"),
      InvalidInput);
  CHECK_THROWS_AS(
      JobConfig::from_string(
          R"({"task":"dance","extension":{"p":3,"n":1,"e":[1],"u":[[[0,1]]]}})"),
      InvalidInput);
  CHECK_THROWS_AS(
      JobConfig::from_string(
          R"({"task":"analyze","extension":{"p":3,"n":1,"e":[1],"u":[[[0,1]]],"x":0}})"),
      InvalidInput);
}

TEST_CASE("analyze certificate carries the ramification data") {
  const JobConfig cfg = JobConfig::from_string(kAnalyzeP3);
  const json cert = run_job(cfg);
  CHECK(cert["results"]["breaks"] == json::array({1}));
  CHECK(cert["results"]["different"] == 4);
  CHECK(cert["results"]["i0"] == 2);
  CHECK(cert["results"]["breaks_congruent"] == true);
  CHECK(cert["results"]["stability_threshold"] == 1);
  CHECK(cert["retries"] == json::array({64}));
  CHECK(cert["tool"]["name"] == "galscaf");
}

TEST_CASE("certificates are byte-stable and thread-count independent") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "roundtrip",
    "cap": 96,
    "extension": {"p": 3, "m": 1, "n": 1, "e": [2], "u": [[[0, 1]]]}
  })");
  RunOptions one;
  one.threads = 1;
  RunOptions four;
  four.threads = 4;
  const std::string a = emit_certificate(run_job(cfg, one), "json");
  const std::string b = emit_certificate(run_job(cfg, one), "json");
  const std::string c = emit_certificate(run_job(cfg, four), "json");
  CHECK(a == b);
  CHECK(a == c);
  // parse back: structurally equal
  CHECK(json::parse(a) == json::parse(c));
}

TEST_CASE("roundtrip certificate reports the equivalence pipeline") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "roundtrip",
    "extension": {"p": 2, "m": 1, "n": 1, "e": [3], "u": [[[0, 1]]]}
  })");
  const json cert = run_job(cfg);
  const json& r = cert["results"];
  CHECK(r["candidate_is_scaffold"] == true);
  CHECK(r["witness"]["semistable"] == true);
  CHECK(r["witness"]["stable"] == true);
  CHECK(r["promotion"]["promoted"] == true);
  CHECK(r["promotion"]["precision"] == "inf");
  CHECK(r["rebuilt_certified"].get<std::int64_t>() >= 1);
  CHECK(r["stable_by_threshold"] == true);
}

TEST_CASE("diagram task evaluates a user-supplied xi") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "diagram",
    "extension": {"p": 3, "m": 1, "n": 1, "e": [1], "u": [[[0, 1]]]},
    "params": {"xi": [
      {"sigma": [1], "coeff": [[0, 1]]},
      {"sigma": [0], "coeff": [[0, 2]]}
    ]}
  })");
  const json cert = run_job(cfg);
  const json& d = cert["results"]["diagram"];
  CHECK(d["semistable"] == true);
  CHECK(d["stable"] == true);
  CHECK(d["d"] == -1);
  CHECK(d["precision"] == "inf");
  CHECK(d["N"] == json::array({json::array({-1, 0}), json::array({-3, 2})}));
}

TEST_CASE("falsify task on the non-congruent tower") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "falsify",
    "cap": 128,
    "seed": 1,
    "extension": {"p": 3, "m": 1, "n": 2, "e": [1, 2], "u": [[[0, 1]], [[0, 1]]]},
    "params": {"budget": 48}
  })");
  const json cert = run_job(cfg);
  CHECK(cert["results"]["breaks_congruent"] == false);
  CHECK(cert["results"]["falsifier"]["falsified"] == true);
  CHECK(cert["seed"] == 1);
}

TEST_CASE("scaffold-verify task with an explicit table") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "scaffold-verify",
    "extension": {"p": 3, "m": 1, "n": 1, "e": [1], "u": [[[0, 1]]]},
    "params": {"scaffold": [[
      {"sigma": [1], "coeff": [[0, 1]]},
      {"sigma": [0], "coeff": [[0, 2]]}
    ]], "max_precision": 6}
  })");
  const json cert = run_job(cfg);
  CHECK(cert["results"]["verify"]["is_scaffold"] == true);
  CHECK(cert["results"]["verify"]["certified"] == 1);
}

TEST_CASE("retry ladder doubles the cap and records it") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "analyze",
    "cap": 2,
    "extension": {"p": 2, "m": 1, "n": 2, "e": [1, 5], "u": [[[0, 1]], [[0, 1]]]}
  })");
  const json cert = run_job(cfg);
  CHECK(cert["retries"].size() > 1);
  CHECK(cert["results"]["breaks"] == json::array({1, 9}));
}

TEST_CASE("precision ceiling surfaces as its own failure") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "analyze",
    "cap": 2,
    "cap_ceiling": 4,
    "extension": {"p": 2, "m": 1, "n": 2, "e": [1, 5], "u": [[[0, 1]], [[0, 1]]]}
  })");
  CHECK_THROWS_AS(run_job(cfg), PrecisionCeiling);
}

TEST_CASE("text format renders the diagram table") {
  const JobConfig cfg = JobConfig::from_string(R"({
    "task": "diagram",
    "extension": {"p": 2, "m": 1, "n": 1, "e": [1], "u": [[[0, 1]]]},
    "params": {"xi": [{"sigma": [0], "coeff": [[0, 1]]}]}
  })");
  const json cert = run_job(cfg);
  const std::string text = emit_certificate(cert, "text");
  CHECK(text.find("N:") != std::string::npos);
  CHECK(text.find("d:") != std::string::npos);
  CHECK(text.find("precision") != std::string::npos);
  CHECK(emit_certificate(cert, "text") == text);
  CHECK_THROWS_AS(emit_certificate(cert, "yaml"), InvalidInput);
}
