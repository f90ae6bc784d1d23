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

#include "circq_cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "circq/bargmann.hpp"
#include "circq/bipartite.hpp"
#include "circq/channels.hpp"
#include "circq/coherence.hpp"
#include "circq/errors.hpp"
#include "circq/io.hpp"

namespace circq::cli {

namespace {

struct Output {
  std::string path;
  int digits = 0;
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "Write the result to this file instead of stdout");
  cmd->add_option("--digits", o.digits,
                  "Significant digits for emitted numbers (default: shortest round-trip)")
      ->check(CLI::Range(1, 17));
}

std::optional<int> digits_of(const Output& o) {
  return o.digits > 0 ? std::optional<int>(o.digits) : std::nullopt;
}

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
  } else {
    io::write_text_file(o.path, text);
  }
}

void emit_json(const Output& o, io::Json j, std::ostream& out) {
  if (o.digits > 0) io::round_numbers(j, o.digits);
  emit(o, j.dump(2) + "\n", out);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

bool looks_inline(const std::string& s) {
  const unsigned char c = s.empty() ? 'x' : static_cast<unsigned char>(s.front());
  return std::isdigit(c) || c == '.' || c == '-' || c == '+';
}

// "uniform", an inline comma list, or a JSON array file.
ChannelWeights resolve_weights(const std::string& spec, std::optional<std::size_t> dim) {
  if (spec == "uniform") {
    if (!dim) throw DomainError("--weights uniform needs a dimension (--dim)");
    return ChannelWeights::uniform(*dim);
  }
  ChannelWeights w = looks_inline(spec) ? io::weights_from_csv(spec)
                                        : io::weights_from_json(io::read_json_file(spec));
  if (dim && w.dim() != *dim) {
    throw ShapeError("weights have length " + std::to_string(w.dim()) +
                     " but the dimension is " + std::to_string(*dim));
  }
  return w;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant quantum channels: spectra, coherence, Bargmann invariants", "circq"};
  app.require_subcommand(1);

  // channel apply
  auto* channel = app.add_subcommand("channel", "Apply a circulant channel or inspect it");
  channel->require_subcommand(1);
  auto* apply = channel->add_subcommand("apply", "Write Phi_lambda(X) for a matrix file");
  std::string apply_weights;
  std::string apply_input;
  Output apply_out;
  apply->add_option("--weights", apply_weights, "Weights: uniform, a comma list, or a JSON file")
      ->required();
  apply->add_option("matrix", apply_input, "Matrix JSON file")->required();
  add_output_flags(apply, apply_out);

  // channel spectrum
  auto* spectrum = channel->add_subcommand(
      "spectrum", "Channel spectrum, alpha coefficients, Choi partial-transpose spectrum");
  std::string spectrum_weights;
  std::size_t spectrum_dim = 0;
  double spectrum_tol = tol::kStructural;
  Output spectrum_out;
  spectrum->add_option("--weights", spectrum_weights,
                       "Weights: uniform, a comma list, or a JSON file")
      ->required();
  auto* dim_opt = spectrum->add_option("--dim", spectrum_dim, "Dimension (required for uniform)");
  spectrum->add_option("--tol", spectrum_tol, "Tolerance for the entanglement-breaking test");
  add_output_flags(spectrum, spectrum_out);

  // coherence sweep
  auto* coherence = app.add_subcommand("coherence", "Coherence bounds");
  coherence->require_subcommand(1);
  auto* sweep = coherence->add_subcommand("sweep", "Qutrit coherence sweep over theta in [0, pi]");
  double sweep_phi = std::numbers::pi / 6.0;
  long long sweep_steps = 200;
  int sweep_p = 1;
  std::string sweep_format = "csv";
  Output sweep_out;
  sweep->add_option("--phi", sweep_phi, "Relative phase (radians)");
  sweep->add_option("--steps", sweep_steps, "Number of grid points (>= 2)");
  sweep->add_option("--p", sweep_p, "Norm selector, 1 or 2");
  sweep->add_option("--format", sweep_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_output_flags(sweep, sweep_out);

  // bargmann canon
  auto* bargmann = app.add_subcommand("bargmann", "Bargmann invariants");
  bargmann->require_subcommand(1);
  auto* canon = bargmann->add_subcommand("canon", "Canonicalise a tuple of pure states");
  std::string canon_input;
  Output canon_out;
  canon->add_option("tuple", canon_input, "Tuple JSON file")->required();
  add_output_flags(canon, canon_out);

  // bipartite demo
  auto* bipartite = app.add_subcommand("bipartite", "Bipartite demonstrations");
  bipartite->require_subcommand(1);
  auto* demo = bipartite->add_subcommand(
      "demo", "Apply Phi_A (x) id_B to a random entangled state and check PPT");
  std::size_t demo_dA = 2;
  std::size_t demo_dB = 2;
  std::uint64_t demo_seed = 1;
  double demo_tol = tol::kStructural;
  Output demo_out;
  demo->add_option("--dA", demo_dA, "Dimension of A (>= 2)");
  demo->add_option("--dB", demo_dB, "Dimension of B (>= 2)");
  demo->add_option("--seed", demo_seed, "Random seed");
  demo->add_option("--tol", demo_tol, "PPT tolerance");
  add_output_flags(demo, demo_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "circq: error: " << one_line(e.what()) << '\n';
    return kValidation;
  }

  try {
    if (apply->parsed()) {
      const ComplexMatrix x = io::matrix_from_json(io::read_json_file(apply_input));
      const std::size_t d = require_square(x, "channel apply");
      const ChannelWeights w = resolve_weights(apply_weights, d);
      const ComplexMatrix y = w.is_uniform() ? apply_uniform(x) : apply_closed_form(w, x);
      emit_json(apply_out, io::matrix_to_json(y), out);
    } else if (spectrum->parsed()) {
      std::optional<std::size_t> dim;
      if (dim_opt->count() > 0) dim = spectrum_dim;
      const ChannelWeights w = resolve_weights(spectrum_weights, dim);
      emit_json(spectrum_out,
                io::channel_summary_to_json(io::summarize_channel(w, spectrum_tol)), out);
    } else if (sweep->parsed()) {
      if (sweep_steps < 2) {
        throw DomainError("--steps must be at least 2, got " + std::to_string(sweep_steps));
      }
      const NormSelector p = norm_selector_from_int(sweep_p);
      const auto grid =
          inclusive_grid(0.0, std::numbers::pi, static_cast<std::size_t>(sweep_steps));
      const auto rows = coherence_sweep(sweep_phi, grid, p);
      if (sweep_format == "csv") {
        emit(sweep_out, io::sweep_to_csv(rows, digits_of(sweep_out)), out);
      } else {
        emit_json(sweep_out, io::sweep_to_json(rows), out);
      }
    } else if (canon->parsed()) {
      const StateTuple psi = io::tuple_from_json(io::read_json_file(canon_input));
      const CanonicalResult result = canonicalize(psi);
      io::Json j = io::canonicalization_to_json(result);
      j["rescale_ratio"] = rescale_to_set_membership(result.report.original_invariant, psi);
      emit_json(canon_out, std::move(j), out);
    } else if (demo->parsed()) {
      const ErasureDemo d = erasure_demo(demo_dA, demo_dB, demo_seed, demo_tol);
      emit_json(demo_out, io::erasure_to_json(d, demo_seed), out);
    }
  } catch (const IoError& e) {
    err << "circq: error: " << one_line(e.what()) << '\n';
    return kIoFailure;
  } catch (const DegenerateInputError& e) {
    err << "circq: error: " << one_line(e.what()) << '\n';
    return kDegenerate;
  } catch (const SamplingError& e) {
    err << "circq: error: " << one_line(e.what()) << '\n';
    return kSampling;
  } catch (const Error& e) {
    err << "circq: error: " << one_line(e.what()) << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "circq: internal error: " << one_line(e.what()) << '\n';
    return kIoFailure;
  }
  return kOk;
}

}  // namespace circq::cli
