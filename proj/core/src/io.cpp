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

#include "circq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "circq/errors.hpp"

namespace circq::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) {
    throw FormatError(std::string(what) + ": expected a JSON object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw FormatError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + ": expected a number");
  return j.get<double>();
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) throw FormatError(std::string(what) + ": expected a boolean");
  return j.get<bool>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw FormatError(std::string(what) + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

Json optional_count(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<std::size_t> optional_count_from(const Json& j, const char* what) {
  if (j.is_null()) return std::nullopt;
  return count(j, what);
}

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  // from_chars rejects a leading '+'.
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw FormatError(std::string(what) + ": cannot parse number \"" + std::string(text) +
                      "\"");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

const char* subsystem_name(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

Subsystem subsystem_from(const Json& j) {
  if (j == "A") return Subsystem::A;
  if (j == "B") return Subsystem::B;
  throw FormatError("ppt report: \"transposed\" must be \"A\" or \"B\"");
}

}  // namespace

std::string format_double(double v, std::optional<int> digits) {
  char buf[64];
  std::to_chars_result res{};
  if (digits) {
    res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, *digits);
  } else {
    res = std::to_chars(buf, buf + sizeof buf, v);
  }
  return std::string(buf, res.ptr);
}

double round_significant(double v, int digits) {
  if (!std::isfinite(v) || v == 0.0) return v;
  return parse_double(format_double(v, digits), "round_significant");
}

void round_numbers(Json& j, int digits) {
  if (j.is_number_float()) {
    j = round_significant(j.get<double>(), digits);
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child, digits);
  }
}

Json complex_array_to_json(const std::vector<Complex>& values) {
  Json re = Json::array();
  Json im = Json::array();
  for (const Complex& v : values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::vector<Complex> complex_array_from_json(const Json& j) {
  const auto re = numbers(field(j, "re", "complex array"), "complex array re");
  const auto im = numbers(field(j, "im", "complex array"), "complex array im");
  if (re.size() != im.size()) {
    throw FormatError("complex array: \"re\" and \"im\" differ in length");
  }
  std::vector<Complex> out(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) out[k] = Complex(re[k], im[k]);
  return out;
}

Json real_array_to_json(const RealVector& values) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < values.size(); ++k) out.push_back(values(k));
  return out;
}

RealVector real_array_from_json(const Json& j) {
  const auto v = numbers(j, "real array");
  return Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      re.push_back(m(i, k).real());
      im.push_back(m(i, k).imag());
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)},
              {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = count(field(j, "rows", "matrix"), "matrix rows");
  const std::size_t cols = count(field(j, "cols", "matrix"), "matrix cols");
  const auto re = numbers(field(j, "re", "matrix"), "matrix re");
  const auto im = numbers(field(j, "im", "matrix"), "matrix im");
  if (re.size() != rows * cols || im.size() != rows * cols) {
    throw FormatError("matrix: expected " + std::to_string(rows * cols) +
                      " entries in \"re\" and \"im\"");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      m((Eigen::Index)i, (Eigen::Index)k) = Complex(re[i * cols + k], im[i * cols + k]);
    }
  }
  return m;
}

Json bipartite_to_json(const BipartiteOperator& x) {
  Json j = matrix_to_json(x.matrix());
  j["dA"] = x.dA();
  j["dB"] = x.dB();
  return j;
}

BipartiteOperator bipartite_from_json(const Json& j) {
  const std::size_t dA = count(field(j, "dA", "bipartite operator"), "dA");
  const std::size_t dB = count(field(j, "dB", "bipartite operator"), "dB");
  return BipartiteOperator(matrix_from_json(j), dA, dB);
}

Json weights_to_json(const ChannelWeights& w) { return Json(w.values()); }

ChannelWeights weights_from_json(const Json& j) {
  return ChannelWeights(numbers(j, "weights"));
}

ChannelWeights weights_from_csv(const std::string& text) {
  std::vector<double> values;
  for (const auto part : split(trim(text), ',')) {
    values.push_back(parse_double(trim(part), "weights"));
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw DomainError("weights: entries must have a positive finite sum");
  }
  for (double& v : values) v /= sum;
  return ChannelWeights(std::move(values));
}

Json tuple_to_json(const StateTuple& psi) {
  Json out = Json::array();
  for (const auto& v : psi.vectors()) {
    out.push_back(complex_array_to_json(std::vector<Complex>(v.begin(), v.end())));
  }
  return out;
}

StateTuple tuple_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("tuple: expected an array of vectors");
  std::vector<ComplexVector> vectors;
  for (const auto& entry : j) {
    const auto values = complex_array_from_json(entry);
    vectors.emplace_back(
        Eigen::Map<const ComplexVector>(values.data(), static_cast<Eigen::Index>(values.size())));
  }
  if (vectors.empty()) throw FormatError("tuple: no vectors given");
  return StateTuple(std::move(vectors));
}

Json canonicalization_to_json(const CanonicalResult& result) {
  const auto& r = result.report;
  Json report{
      {"original_invariant_re", r.original_invariant.real()},
      {"original_invariant_im", r.original_invariant.imag()},
      {"canonical_invariant_re", r.canonical_invariant.real()},
      {"canonical_invariant_im", r.canonical_invariant.imag()},
      {"common_inner_product_re", r.common_inner_product.real()},
      {"common_inner_product_im", r.common_inner_product.imag()},
      {"consecutive_equal", r.consecutive_equal},
      {"arg_match", r.arg_match},
      {"modulus_bound_holds", r.modulus_bound_holds},
  };
  return Json{{"report", std::move(report)}, {"tuple", tuple_to_json(result.tuple)}};
}

CanonicalResult canonicalization_from_json(const Json& j) {
  const Json& r = field(j, "report", "canonicalization");
  auto complex_field = [&](const char* re, const char* im) {
    return Complex(number(field(r, re, "report"), re), number(field(r, im, "report"), im));
  };
  CanonicalizationReport report{
      complex_field("original_invariant_re", "original_invariant_im"),
      complex_field("canonical_invariant_re", "canonical_invariant_im"),
      complex_field("common_inner_product_re", "common_inner_product_im"),
      boolean(field(r, "consecutive_equal", "report"), "consecutive_equal"),
      boolean(field(r, "arg_match", "report"), "arg_match"),
      boolean(field(r, "modulus_bound_holds", "report"), "modulus_bound_holds"),
  };
  // The emitted vectors are rounded to double precision only, so the default
  // unit-norm tolerance still applies.
  return CanonicalResult{tuple_from_json(field(j, "tuple", "canonicalization")), report};
}

ChannelSummary summarize_channel(const ChannelWeights& w, double tol) {
  return ChannelSummary{w,
                        channel_spectrum(w),
                        alpha_coefficients(w),
                        choi_pt_spectrum(w),
                        predicted_choi_pt_spectrum(w),
                        is_entanglement_breaking(w, tol)};
}

Json channel_summary_to_json(const ChannelSummary& s) {
  return Json{
      {"dim", s.weights.dim()},
      {"weights", weights_to_json(s.weights)},
      {"channel_spectrum", complex_array_to_json(s.spectrum.eigenvalues)},
      {"multiplicity_of_one", optional_count(s.spectrum.multiplicity_of_one)},
      {"multiplicity_of_zero", optional_count(s.spectrum.multiplicity_of_zero)},
      {"alpha", complex_array_to_json(s.alpha.alpha)},
      {"choi_pt_spectrum", real_array_to_json(s.choi_pt_spectrum)},
      {"predicted_choi_pt_spectrum", real_array_to_json(s.predicted_choi_pt_spectrum)},
      {"is_entanglement_breaking", s.is_entanglement_breaking},
  };
}

ChannelSummary channel_summary_from_json(const Json& j) {
  const char* what = "channel summary";
  ChannelSpectrumReport spectrum{
      complex_array_from_json(field(j, "channel_spectrum", what)),
      optional_count_from(field(j, "multiplicity_of_one", what), "multiplicity_of_one"),
      optional_count_from(field(j, "multiplicity_of_zero", what), "multiplicity_of_zero"),
  };
  return ChannelSummary{
      weights_from_json(field(j, "weights", what)),
      std::move(spectrum),
      AlphaCoefficients{complex_array_from_json(field(j, "alpha", what))},
      real_array_from_json(field(j, "choi_pt_spectrum", what)),
      real_array_from_json(field(j, "predicted_choi_pt_spectrum", what)),
      boolean(field(j, "is_entanglement_breaking", what), "is_entanglement_breaking"),
  };
}

Json ppt_to_json(const PptReport& r) {
  return Json{{"min_eigenvalue", r.min_eigenvalue},
              {"is_ppt", r.is_ppt},
              {"transposed", subsystem_name(r.transposed)},
              {"spectrum", real_array_to_json(r.spectrum)}};
}

PptReport ppt_from_json(const Json& j) {
  const char* what = "ppt report";
  return PptReport{number(field(j, "min_eigenvalue", what), "min_eigenvalue"),
                   boolean(field(j, "is_ppt", what), "is_ppt"),
                   real_array_from_json(field(j, "spectrum", what)),
                   subsystem_from(field(j, "transposed", what))};
}

Json erasure_to_json(const ErasureDemo& demo, std::uint64_t seed) {
  return Json{{"dA", demo.input.dA()},
              {"dB", demo.input.dB()},
              {"seed", seed},
              {"input_ppt", ppt_to_json(demo.input_ppt)},
              {"output_ppt", ppt_to_json(demo.output_ppt)},
              {"input", bipartite_to_json(demo.input)},
              {"output", bipartite_to_json(demo.output)}};
}

ErasureDemo erasure_from_json(const Json& j) {
  const char* what = "bipartite demo";
  return ErasureDemo{bipartite_from_json(field(j, "input", what)),
                     bipartite_from_json(field(j, "output", what)),
                     ppt_from_json(field(j, "input_ppt", what)),
                     ppt_from_json(field(j, "output_ppt", what))};
}

Json sweep_to_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"theta", r.theta},
                       {"c_rho", r.c_rho},
                       {"c_phi", r.c_phi},
                       {"c_delta", r.c_delta},
                       {"max_deviation", r.max_deviation},
                       {"delta_sign_differs", r.delta_sign_differs}});
  }
  return out;
}

std::vector<SweepRow> sweep_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("sweep: expected an array of records");
  std::vector<SweepRow> rows;
  for (const auto& r : j) {
    rows.push_back(SweepRow{number(field(r, "theta", "sweep"), "theta"),
                            number(field(r, "c_rho", "sweep"), "c_rho"),
                            number(field(r, "c_phi", "sweep"), "c_phi"),
                            number(field(r, "c_delta", "sweep"), "c_delta"),
                            number(field(r, "max_deviation", "sweep"), "max_deviation"),
                            boolean(field(r, "delta_sign_differs", "sweep"),
                                    "delta_sign_differs")});
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, std::optional<int> digits) {
  std::string out = kSweepHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += format_double(r.theta, digits) + ',' + format_double(r.c_rho, digits) + ',' +
           format_double(r.c_phi, digits) + ',' + format_double(r.c_delta, digits) + '\n';
  }
  return out;
}

std::vector<SweepRow> sweep_from_csv(const std::string& text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty() || trim(lines.front()) != kSweepHeader) {
    throw FormatError(std::string("sweep csv: header must be ") + kSweepHeader);
  }
  std::vector<SweepRow> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto cells = split(trim(lines[k]), ',');
    if (cells.size() != 4) {
      throw FormatError("sweep csv: line " + std::to_string(k + 1) + " needs 4 fields");
    }
    rows.push_back(SweepRow{parse_double(cells[0], "sweep csv"),
                            parse_double(cells[1], "sweep csv"),
                            parse_double(cells[2], "sweep csv"),
                            parse_double(cells[3], "sweep csv"), 0.0, false});
  }
  return rows;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buf.str();
}

Json read_json_file(const std::filesystem::path& path) {
  return parse_json(read_text_file(path));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace circq::io
