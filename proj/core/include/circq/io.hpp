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

#pragma once

// JSON and CSV serialization for matrices, weights, tuples and reports.
// Complex arrays are stored as parallel "re"/"im" real arrays, matrices
// row-major. Every emitter has a matching parser.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circq/bargmann.hpp"
#include "circq/bipartite.hpp"
#include "circq/channels.hpp"
#include "circq/coherence.hpp"
#include "circq/matcore.hpp"

namespace circq::io {

using Json = nlohmann::ordered_json;

// Shortest round-trip text when digits is empty, otherwise that many
// significant digits.
std::string format_double(double v, std::optional<int> digits = std::nullopt);

// v rounded to the given number of significant digits.
double round_significant(double v, int digits);

// Rounds every floating-point number inside j.
void round_numbers(Json& j, int digits);

Json complex_array_to_json(const std::vector<Complex>& values);
std::vector<Complex> complex_array_from_json(const Json& j);

Json real_array_to_json(const RealVector& values);
RealVector real_array_from_json(const Json& j);

// {"rows", "cols", "re", "im"}.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// Matrix record plus "dA" and "dB".
Json bipartite_to_json(const BipartiteOperator& x);
BipartiteOperator bipartite_from_json(const Json& j);

Json weights_to_json(const ChannelWeights& w);
ChannelWeights weights_from_json(const Json& j);

// "0.5,0.3,0.2"; the parsed values are normalised to sum 1 before validation.
ChannelWeights weights_from_csv(const std::string& text);

// [{"re": [...], "im": [...]}, ...].
Json tuple_to_json(const StateTuple& psi);
StateTuple tuple_from_json(const Json& j);

Json canonicalization_to_json(const CanonicalResult& result);
CanonicalResult canonicalization_from_json(const Json& j);

struct ChannelSummary {
  ChannelWeights weights;
  ChannelSpectrumReport spectrum;
  AlphaCoefficients alpha;
  RealVector choi_pt_spectrum;
  RealVector predicted_choi_pt_spectrum;
  bool is_entanglement_breaking;
};

ChannelSummary summarize_channel(const ChannelWeights& w, double tol = tol::kStructural);
Json channel_summary_to_json(const ChannelSummary& s);
ChannelSummary channel_summary_from_json(const Json& j);

Json ppt_to_json(const PptReport& r);
PptReport ppt_from_json(const Json& j);

Json erasure_to_json(const ErasureDemo& demo, std::uint64_t seed);
ErasureDemo erasure_from_json(const Json& j);

// JSON records carry every SweepRow field; CSV carries theta and the three
// coherence values only.
Json sweep_to_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_json(const Json& j);

inline constexpr const char* kSweepHeader = "theta,c_rho,c_phi,c_delta";
std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         std::optional<int> digits = std::nullopt);
std::vector<SweepRow> sweep_from_csv(const std::string& text);

// Throws IoError when the file cannot be read, FormatError on bad JSON.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace circq::io
