// Copyright 2026 The qlocal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLOCAL_CLI_HPP
#define QLOCAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qlocal::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kIoError = 3,
  kUndefinedResult = 4,
};

/// Entry point of the `qlocal` tool. Reports go to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Shortest decimal that round-trips to the same double ("inf", "nan" for
/// non-finite values).
std::string format_double(double x);

/// j_min + i * step for i = 0 .. floor((j_max - j_min) / step + 1e-9),
/// each value rounded to 12 decimals so grid points print cleanly.
std::vector<double> linear_grid(double j_min, double j_max, double step);

} // namespace qlocal::cli

#endif
