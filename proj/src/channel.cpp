// Copyright 2026 The Authors.
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

#include "mimo_select/channel.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "mimo_select/errors.hpp"

namespace mimo {

using nlohmann::json;

CapacityReport capacity(const MimoChannel& ch, double power) {
  const HermitianForm f = gram(ch.matrix(), power);
  CapacityReport r;
  r.capacity_bits = log_det(f);
  r.power = power;
  r.n_t = ch.n_t();
  r.n_r = ch.n_r();
  r.spectrum = *f.cached_spectrum();
  return r;
}

double capacity_bits(const MimoChannel& ch, double power) {
  return log_det(gram(ch.matrix(), power));
}

MimoChannel subchannel(const MimoChannel& ch, const SubsetIndex& tx,
                       const SubsetIndex& rx) {
  if (tx.universe() != ch.n_t() || rx.universe() != ch.n_r()) {
    throw InvalidInput("subset universes must match the channel dimensions");
  }
  if (tx.empty() || rx.empty()) {
    throw InvalidInput("subchannel needs at least one antenna on each side");
  }
  std::vector<Complex> e;
  e.reserve(static_cast<std::size_t>(tx.size() * rx.size()));
  for (int r : rx.members()) {
    for (int c : tx.members()) e.push_back(ch.matrix()(r - 1, c - 1));
  }
  return MimoChannel(ComplexMatrix(rx.size(), tx.size(), std::move(e)));
}

MimoChannel gen_all_ones(int n_t, int n_r) {
  if (n_t < 1 || n_r < 1) throw InvalidInput("dimensions must be positive");
  return MimoChannel(ComplexMatrix(
      n_r, n_t, std::vector<Complex>(static_cast<std::size_t>(n_t * n_r), 1.0)));
}

MimoChannel gen_parallel(int n) {
  if (n < 1) throw InvalidInput("dimension must be positive");
  return MimoChannel(ComplexMatrix::identity(n));
}

MimoChannel gen_gaussian(int n_t, int n_r, std::uint64_t seed) {
  if (n_t < 1 || n_r < 1) throw InvalidInput("dimensions must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> component(0.0, std::sqrt(0.5));
  std::vector<Complex> e(static_cast<std::size_t>(n_t * n_r));
  for (auto& z : e) {
    const double re = component(rng);
    const double im = component(rng);
    z = Complex(re, im);
  }
  return MimoChannel(ComplexMatrix(n_r, n_t, std::move(e)));
}

// ---------------------------------------------------------------------------
// JSON

namespace {

int read_dim(const json& doc, const char* field) {
  if (!doc.contains(field)) {
    throw ParseError(std::string("missing field \"") + field + "\"");
  }
  const json& v = doc.at(field);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + field + "\" must be an integer");
  }
  const auto n = v.get<long long>();
  if (n < 1 || n > 1 << 20) {
    throw ParseError(std::string("field \"") + field +
                     "\" must be a positive integer, got " + std::to_string(n));
  }
  return static_cast<int>(n);
}

double finite_or_throw(double v, const std::string& where) {
  if (!std::isfinite(v)) throw ParseError("non-finite value in " + where);
  return v;
}

}  // namespace

ChannelFile parse_channel_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed channel JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("channel JSON must be an object");
  const int n_r = read_dim(doc, "n_r");
  const int n_t = read_dim(doc, "n_t");

  std::optional<double> hint;
  if (doc.contains("power_hint") && !doc.at("power_hint").is_null()) {
    const json& p = doc.at("power_hint");
    if (!p.is_number()) throw ParseError("field \"power_hint\" must be a number");
    hint = finite_or_throw(p.get<double>(), "field \"power_hint\"");
  }

  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw ParseError("field \"entries\" must be an array");
  }
  const json& arr = doc.at("entries");
  const std::size_t expected = static_cast<std::size_t>(n_r) * n_t;
  if (arr.size() != expected) {
    throw ParseError("field \"entries\" has " + std::to_string(arr.size()) +
                     " elements, expected n_r*n_t = " + std::to_string(expected));
  }
  std::vector<Complex> e;
  e.reserve(expected);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& pair = arr[i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw ParseError(where + " must be a [re, im] pair of numbers");
    }
    e.emplace_back(finite_or_throw(pair[0].get<double>(), where),
                   finite_or_throw(pair[1].get<double>(), where));
  }
  return {MimoChannel(ComplexMatrix(n_r, n_t, std::move(e))), hint};
}

std::string channel_to_json(const MimoChannel& ch,
                            std::optional<double> power_hint) {
  json doc;
  doc["n_r"] = ch.n_r();
  doc["n_t"] = ch.n_t();
  if (power_hint) doc["power_hint"] = *power_hint;
  json entries = json::array();
  for (const auto& z : ch.matrix().entries()) {
    entries.push_back({z.real(), z.imag()});
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) {
    const auto b = cur.find_first_not_of(" \t\r");
    const auto e = cur.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_real(const std::string& field, int line_no, std::size_t col) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(line_no) + ", field " +
                     std::to_string(col + 1) + ": invalid real \"" + field + "\"");
  }
  return v;
}

int parse_dim(const std::string& field, int line_no, const char* name) {
  int v = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() ||
      v < 1) {
    throw ParseError("line " + std::to_string(line_no) + ": " + name +
                     " must be a positive integer, got \"" + field + "\"");
  }
  return v;
}

}  // namespace

ChannelFile parse_channel_csv(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      lines.emplace_back(no, line);
    }
  }
  std::size_t pos = 0;
  if (pos < lines.size()) {
    const auto f = split_fields(lines[pos].second);
    if (f.size() == 2 && f[0] == "n_r" && f[1] == "n_t") ++pos;
  }
  if (pos >= lines.size()) throw ParseError("CSV channel file has no dimension line");
  const auto dims = split_fields(lines[pos].second);
  const int dim_line = lines[pos].first;
  if (dims.size() != 2) {
    throw ParseError("line " + std::to_string(dim_line) +
                     ": expected \"n_r,n_t\" dimension line");
  }
  const int n_r = parse_dim(dims[0], dim_line, "n_r");
  const int n_t = parse_dim(dims[1], dim_line, "n_t");
  ++pos;

  if (lines.size() - pos != static_cast<std::size_t>(n_r)) {
    throw ParseError("expected " + std::to_string(n_r) + " matrix rows after line " +
                     std::to_string(dim_line) + ", found " +
                     std::to_string(lines.size() - pos));
  }
  std::vector<Complex> e;
  e.reserve(static_cast<std::size_t>(n_r) * n_t);
  for (; pos < lines.size(); ++pos) {
    const auto& [no, line] = lines[pos];
    const auto f = split_fields(line);
    if (f.size() != static_cast<std::size_t>(2 * n_t)) {
      throw ParseError("line " + std::to_string(no) + ": expected " +
                       std::to_string(2 * n_t) + " values, found " +
                       std::to_string(f.size()));
    }
    for (std::size_t c = 0; c < f.size(); c += 2) {
      e.emplace_back(parse_real(f[c], no, c), parse_real(f[c + 1], no, c + 1));
    }
  }
  return {MimoChannel(ComplexMatrix(n_r, n_t, std::move(e))), std::nullopt};
}

std::string channel_to_csv(const MimoChannel& ch) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << ch.n_r() << ',' << ch.n_t() << '\n';
  for (int r = 0; r < ch.n_r(); ++r) {
    for (int c = 0; c < ch.n_t(); ++c) {
      const Complex& z = ch.matrix()(r, c);
      if (c) out << ',';
      out << z.real() << ',' << z.imag();
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Files

namespace {

bool is_csv(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".csv";
}

}  // namespace

ChannelFile load_channel_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open channel file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return is_csv(path) ? parse_channel_csv(buf.str()) : parse_channel_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

MimoChannel load_channel(const std::filesystem::path& path) {
  return load_channel_file(path).channel;
}

void save_channel(const MimoChannel& ch, const std::filesystem::path& path,
                  std::optional<double> power_hint) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write channel file " + path.string());
  out << (is_csv(path) ? channel_to_csv(ch) : channel_to_json(ch, power_hint));
  if (!out) throw InvalidInput("failed writing channel file " + path.string());
}

}  // namespace mimo
