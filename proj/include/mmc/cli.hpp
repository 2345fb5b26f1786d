// Copyright (c) 2026, The minmax-curve Authors
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

// Command-line front end.
//
//   mmc solve          --input <instance> [--output f] [--svg f]
//   mmc verify         --input <solve output | {instance, curve}> [--samples n]
//   mmc sweep          [--input <instance> | --seed s] [--grid n] [--d2-levels k]
//   mmc compare        --input <instance>
//   mmc export         --input <curve> [--offset d] [--output f.svg]
//   mmc demo-illposed  [--input {A, alpha, B, beta}] --radius R
//
// --input takes a path or inline JSON (a value starting with '{').
// Exit codes: 0 success, 1 validation error, 2 internal error. Errors are
// written to stderr as {"error":{"code":...,"message":...}}.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mmc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmc::cli
