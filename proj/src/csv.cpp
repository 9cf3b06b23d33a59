// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace rrhmux {

const char* const kCsvHeader =
    "scenario,N,K,q,Q,theta,S,L,ell,beta,M,metric,value,stderr,trials";

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  std::array<char, 40> buf;
  // integral values print without exponent or trailing ".0"
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    const auto ll = static_cast<long long>(v);
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), ll);
    return {buf.data(), res.ptr};
  }
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

namespace {

std::string format_axis(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

auto row_key(const ResultRow& r) {
  auto axis = [](const std::optional<double>& v) {
    return v ? *v : -std::numeric_limits<double>::infinity();
  };
  return std::make_tuple(r.scenario, axis(r.N), axis(r.K), axis(r.q), axis(r.Q),
                         axis(r.theta), axis(r.S), axis(r.L), axis(r.ell),
                         axis(r.beta), axis(r.M), r.metric);
}

}  // namespace

std::string format_row(const ResultRow& r) {
  std::string s = r.scenario;
  for (const auto* a : {&r.N, &r.K, &r.q, &r.Q, &r.theta, &r.S, &r.L, &r.ell, &r.beta, &r.M}) {
    s += ',';
    s += format_axis(*a);
  }
  s += ',';
  s += r.metric;
  s += ',';
  s += format_double(r.value);
  s += ',';
  s += format_double(r.stderr_);
  s += ',';
  s += std::to_string(r.trials);
  return s;
}

void emit_csv(std::vector<ResultRow> rows, std::ostream& out) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) { return row_key(a) < row_key(b); });
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << format_row(r) << '\n';
}

void emit_csv(std::vector<ResultRow> rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // binary: byte-identical across reruns
  if (!f) throw std::runtime_error("emit_csv: cannot open '" + path + "'");
  emit_csv(std::move(rows), static_cast<std::ostream&>(f));
}

}  // namespace rrhmux
