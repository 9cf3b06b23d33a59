// SPDX-License-Identifier: Apache-2.0
// Result rows and deterministic CSV emission (stable sort, shortest
// round-trip number formatting; reruns are byte-identical).
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rrhmux {

struct ResultRow {
  std::string scenario;
  // sweep axes in canonical column order; unset axes print empty
  std::optional<double> N, K, q, Q, theta, S, L, ell, beta, M;
  std::string metric;
  double value = 0.0;
  double stderr_ = 0.0;
  long trials = 0;
};

extern const char* const kCsvHeader;

std::string format_double(double v);  // shortest round-trip
std::string format_row(const ResultRow& row);

// sorts rows canonically (scenario, axes, metric) and writes header + rows
void emit_csv(std::vector<ResultRow> rows, std::ostream& out);
void emit_csv(std::vector<ResultRow> rows, const std::string& path);

}  // namespace rrhmux
