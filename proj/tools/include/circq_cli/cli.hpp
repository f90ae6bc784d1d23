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

#include <iosfwd>
#include <string>
#include <vector>

namespace circq::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoFailure = 1;
inline constexpr int kValidation = 2;
inline constexpr int kDegenerate = 3;
inline constexpr int kSampling = 4;

// Runs the command line given without the program name. Results go to out
// (or the --out file); failures write one line to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circq::cli
