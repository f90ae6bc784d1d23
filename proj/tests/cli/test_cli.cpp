// Copyright 2026 The circq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "circq/io.hpp"
#include "circq/random.hpp"
#include "circq_cli/cli.hpp"

namespace circq {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("circq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const io::Json& j) {
    const auto p = dir_ / name;
    io::write_text_file(p, j.dump());
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

void expect_one_line_error(const Result& r) {
  EXPECT_TRUE(r.out.empty());
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
}

TEST_F(CliTest, ChannelApplyUniformIsCirculant) {
  Rng rng(1);
  const auto m = write("x.json", io::matrix_to_json(random_ginibre(3, 3, rng)));
  const Result r = run({"channel", "apply", "--weights", "uniform", m});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(is_circulant(io::matrix_from_json(io::parse_json(r.out)), 1e-12));
}

TEST_F(CliTest, ChannelApplyIdentityAndWeights) {
  const auto m = write("id.json", io::matrix_to_json(ComplexMatrix::Identity(4, 4)));
  const Result r = run({"channel", "apply", "--weights", "0.1,0.2,0.3,0.4", m});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::matrix_from_json(io::parse_json(r.out)), ComplexMatrix::Identity(4, 4));

  const auto wfile = write("w.json", io::Json::array({0.25, 0.25, 0.25, 0.25}));
  EXPECT_EQ(run({"channel", "apply", "--weights", wfile, m}).code, 0);
}

TEST_F(CliTest, ChannelApplyErrors) {
  const auto m = write("id.json", io::matrix_to_json(ComplexMatrix::Identity(4, 4)));
  const Result mismatch = run({"channel", "apply", "--weights", "0.2,0.3,0.5", m});
  EXPECT_EQ(mismatch.code, 2);
  expect_one_line_error(mismatch);

  const Result missing = run({"channel", "apply", "--weights", "uniform", path("nope.json")});
  EXPECT_EQ(missing.code, 1);
  expect_one_line_error(missing);

  io::write_text_file(path("bad.json"), "{oops");
  EXPECT_EQ(run({"channel", "apply", "--weights", "uniform", path("bad.json")}).code, 2);
  const auto rect = write("rect.json", io::matrix_to_json(ComplexMatrix::Zero(2, 3)));
  EXPECT_EQ(run({"channel", "apply", "--weights", "uniform", rect}).code, 2);
}

TEST_F(CliTest, SpectrumReports) {
  const Result u = run({"channel", "spectrum", "--weights", "uniform", "--dim", "4"});
  ASSERT_EQ(u.code, 0) << u.err;
  const io::Json j = io::parse_json(u.out);
  EXPECT_EQ(j["multiplicity_of_one"], 4);
  EXPECT_EQ(j["multiplicity_of_zero"], 12);
  EXPECT_EQ(j["is_entanglement_breaking"], true);
  EXPECT_NO_THROW(io::channel_summary_from_json(j));

  const Result q = run({"channel", "spectrum", "--weights", "0.75,0.25"});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(io::parse_json(q.out)["is_entanglement_breaking"], false);

  const Result one = run({"channel", "spectrum", "--weights", "uniform", "--dim", "1"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(io::parse_json(one.out)["channel_spectrum"]["re"].size(), 1u);

  EXPECT_EQ(run({"channel", "spectrum", "--weights", "uniform"}).code, 2);
  EXPECT_EQ(run({"channel", "spectrum", "--weights", "0.5,0.5", "--dim", "3"}).code, 2);
}

TEST_F(CliTest, SweepCsv) {
  const auto out = path("sweep.csv");
  const Result r = run({"coherence", "sweep", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string text = io::read_text_file(out);
  EXPECT_EQ(text.substr(0, text.find('\n')), "theta,c_rho,c_phi,c_delta");
  const auto rows = io::sweep_from_csv(text);
  ASSERT_EQ(rows.size(), 200u);
  EXPECT_EQ(rows.front().c_rho, 0.0);
  EXPECT_EQ(rows.front().c_phi, 0.0);
  EXPECT_EQ(rows.front().c_delta, 0.0);
  for (const auto& row : rows) {
    EXPECT_GE(row.c_rho - row.c_phi, -1e-10);
    EXPECT_GE(row.c_phi - row.c_delta, -1e-10);
  }
}

TEST_F(CliTest, SweepOptions) {
  const Result j = run({"coherence", "sweep", "--steps", "5", "--p", "2", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(io::sweep_from_json(io::parse_json(j.out)).size(), 5u);

  const Result d = run({"coherence", "sweep", "--steps", "3", "--digits", "4"});
  ASSERT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("\n1.571,"), std::string::npos) << d.out;

  EXPECT_EQ(run({"coherence", "sweep", "--steps", "1"}).code, 2);
  EXPECT_EQ(run({"coherence", "sweep", "--p", "3"}).code, 2);
  EXPECT_EQ(run({"coherence", "sweep", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"coherence", "sweep", "--digits", "0"}).code, 2);
  EXPECT_EQ(run({"coherence", "sweep", "--out", path("missing/dir/x.csv")}).code, 1);
}

TEST_F(CliTest, BargmannCanon) {
  Rng rng(2);
  std::vector<ComplexVector> v;
  for (int k = 0; k < 4; ++k) v.push_back(random_unit_vector(3, rng));
  const auto f = write("tuple.json", io::tuple_to_json(StateTuple(v)));
  const Result r = run({"bargmann", "canon", f});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::Json j = io::parse_json(r.out);
  EXPECT_EQ(j["report"]["arg_match"], true);
  EXPECT_EQ(j["report"]["modulus_bound_holds"], true);
  EXPECT_EQ(io::canonicalization_from_json(j).tuple.n(), 4u);

  const StateTuple same({v[0], v[0], v[0]});
  const Result s = run({"bargmann", "canon", write("same.json", io::tuple_to_json(same))});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NEAR(io::parse_json(s.out)["report"]["canonical_invariant_re"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, BargmannDegenerate) {
  ComplexVector e0 = ComplexVector::Zero(2), e1 = ComplexVector::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  const auto f = write("orth.json", io::tuple_to_json(StateTuple({e0, e1, e1})));
  const Result r = run({"bargmann", "canon", f});
  EXPECT_EQ(r.code, 3);
  expect_one_line_error(r);
  EXPECT_NE(r.err.find("(1, 2)"), std::string::npos) << r.err;

  const auto bad = write("bad.json", io::parse_json(R"([{"re":[1,1],"im":[0,0]}])"));
  EXPECT_EQ(run({"bargmann", "canon", bad}).code, 2);
}

TEST_F(CliTest, BipartiteDemo) {
  for (const char* dB : {"2", "3"}) {
    for (const char* seed : {"1", "2", "3"}) {
      const Result r = run({"bipartite", "demo", "--dA", "2", "--dB", dB, "--seed", seed});
      ASSERT_EQ(r.code, 0) << r.err;
      const ErasureDemo demo = io::erasure_from_json(io::parse_json(r.out));
      EXPECT_FALSE(demo.input_ppt.is_ppt);
      EXPECT_TRUE(demo.output_ppt.is_ppt);
    }
  }
  EXPECT_EQ(run({"bipartite", "demo", "--dA", "1"}).code, 2);
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"bipartite", "demo", "--seed", "9"},
      {"coherence", "sweep", "--steps", "17"},
      {"channel", "spectrum", "--weights", "0.5,0.3,0.2"},
  };
  for (const auto& c : commands) {
    const Result a = run(c);
    const Result b = run(c);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(CliTest, UsageErrors) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{}, {"frobnicate"}, {"channel"}, {"channel", "apply"},
                                             {"coherence", "sweep", "--steps", "abc"},
                                             {"coherence", "sweep", "--bogus"}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 2);
    expect_one_line_error(r);
  }
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("channel"), std::string::npos);
}

}  // namespace
}  // namespace circq
