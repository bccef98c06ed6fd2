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

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

namespace qlocal::cli {

std::string format_double(double x) {
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  if (x == 0.0)
    x = 0.0; // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<double> linear_grid(double j_min, double j_max, double step) {
  if (!std::isfinite(j_min) || !std::isfinite(j_max) || !std::isfinite(step))
    throw ConfigError("grid bounds must be finite");
  if (!(step > 0.0))
    throw ConfigError("--j-step must be > 0");
  if (j_max < j_min)
    throw ConfigError("--j-max must be >= --j-min");
  const double span = (j_max - j_min) / step + 1e-9;
  if (span > 1e7)
    throw ConfigError("grid has more than 1e7 points; increase --j-step");
  const auto n = static_cast<std::size_t>(std::floor(span)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = j_min + static_cast<double>(i) * step;
    out[i] = std::round(x * 1e12) / 1e12 + 0.0;
  }
  return out;
}

Json json_number(double x) {
  if (!std::isfinite(x))
    return nullptr;
  return x;
}

void write_csv(const RunConfig &cfg, const Json &params, const std::string &header,
               const std::vector<std::string> &rows, std::ostream &out) {
  std::string text;
  text += header;
  text += '\n';
  text += "# params: ";
  text += params.dump();
  text += '\n';
  for (const auto &r : rows) {
    text += r;
    text += '\n';
  }
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoError("cannot open output file '" + cfg.output + "'");
  file << text;
  file.close();
  if (!file)
    throw IoError("failed writing output file '" + cfg.output + "'");
}

} // namespace qlocal::cli
