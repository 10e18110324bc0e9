// Copyright 2026 The mprates Authors
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

#include "mprates/state_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "mprates/errors.hpp"

namespace mprates::io {

namespace {

constexpr double kConjugateTol = 1e-12;

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) {
      text.erase(hash);
    }
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string w; ss >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

double to_double(const std::string& w, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size() || !std::isfinite(v)) {
    throw ParseError("expected a number, got '" + w + "'", line);
  }
  return v;
}

std::size_t to_index(const std::string& w, int line) {
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a basis index, got '" + w + "'", line);
  }
  try {
    return std::stoull(w);
  } catch (const std::exception&) {
    throw ParseError("basis index '" + w + "' is too large", line);
  }
}

const Line& expect(const std::vector<Line>& lines, std::size_t k,
                   const std::string& keyword, int last_line) {
  if (k >= lines.size()) {
    throw ParseError("missing '" + keyword + "' line", last_line + 1);
  }
  const auto& l = lines[k];
  if (l.words[0] != keyword) {
    throw ParseError("expected '" + keyword + "', got '" + l.words[0] + "'",
                     l.number);
  }
  return l;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

AnyState parse_state(std::istream& in) {
  const auto lines = tokenize(in);
  const int last = lines.empty() ? 0 : lines.back().number;

  const auto& head = expect(lines, 0, "mpstate", last);
  if (head.words.size() != 2 || head.words[1] != "1") {
    throw ParseError("unsupported header; expected 'mpstate 1'", head.number);
  }
  const auto& pl = expect(lines, 1, "parties", last);
  const std::vector<std::string> parties(pl.words.begin() + 1, pl.words.end());
  const auto& dl = expect(lines, 2, "dims", last);
  std::vector<int> dims;
  for (std::size_t i = 1; i < dl.words.size(); ++i) {
    const double d = to_double(dl.words[i], dl.number);
    if (d != std::floor(d) || d < 2 || d > 1 << 20) {
      throw ParseError("local dimension must be an integer >= 2", dl.number);
    }
    dims.push_back(static_cast<int>(d));
  }
  if (dims.size() != parties.size()) {
    throw ParseError("dims lists " + std::to_string(dims.size()) +
                         " entries for " + std::to_string(parties.size()) +
                         " parties",
                     dl.number);
  }
  std::optional<SubsystemLayout> layout;
  try {
    layout.emplace(parties, dims);
  } catch (const Error& e) {
    throw ParseError(e.what(), pl.number);
  }
  const auto& kl = expect(lines, 3, "kind", last);
  if (kl.words.size() != 2 || (kl.words[1] != "pure" && kl.words[1] != "mixed")) {
    throw ParseError("kind must be 'pure' or 'mixed'", kl.number);
  }
  const bool pure = kl.words[1] == "pure";
  const std::size_t total = layout->total_dim();

  if (pure) {
    Vector amp = Vector::Zero(static_cast<Eigen::Index>(total));
    std::vector<bool> seen(total, false);
    for (std::size_t k = 4; k < lines.size(); ++k) {
      const auto& l = lines[k];
      if (l.words[0] != "amp") {
        throw ParseError("expected 'amp', got '" + l.words[0] + "'", l.number);
      }
      if (l.words.size() != 4) {
        throw ParseError("'amp' takes index, re, im", l.number);
      }
      const auto i = to_index(l.words[1], l.number);
      if (i >= total) {
        throw ParseError("basis index " + std::to_string(i) +
                             " out of range (dimension " +
                             std::to_string(total) + ")",
                         l.number);
      }
      if (seen[i]) {
        throw ParseError("duplicate amplitude for index " + std::to_string(i),
                         l.number);
      }
      seen[i] = true;
      amp(static_cast<Eigen::Index>(i)) =
          Complex(to_double(l.words[2], l.number), to_double(l.words[3], l.number));
    }
    const double norm2 = amp.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol::kValidation) {
      throw ParseError("state is not normalized: sum of |amp|^2 = " +
                           fmt_short(norm2),
                       last);
    }
    try {
      return PureState(*layout, amp);
    } catch (const Error& e) {
      throw ParseError(e.what(), last);
    }
  }

  const auto n = static_cast<Eigen::Index>(total);
  Matrix rho = Matrix::Zero(n, n);
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Complex, int>> given;
  for (std::size_t k = 4; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.words[0] != "rho") {
      throw ParseError("expected 'rho', got '" + l.words[0] + "'", l.number);
    }
    if (l.words.size() != 5) {
      throw ParseError("'rho' takes row, col, re, im", l.number);
    }
    const auto r = to_index(l.words[1], l.number);
    const auto c = to_index(l.words[2], l.number);
    if (r >= total || c >= total) {
      throw ParseError("matrix index out of range (dimension " +
                           std::to_string(total) + ")",
                       l.number);
    }
    const Complex v(to_double(l.words[3], l.number),
                    to_double(l.words[4], l.number));
    if (r == c && std::abs(v.imag()) > kConjugateTol) {
      throw ParseError("diagonal entry has an imaginary part; not Hermitian",
                       l.number);
    }
    if (!given.emplace(std::make_pair(r, c), std::make_pair(v, l.number)).second) {
      throw ParseError("duplicate entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ")",
                       l.number);
    }
    if (auto mirror = given.find({c, r}); mirror != given.end() && r != c) {
      if (std::abs(mirror->second.first - std::conj(v)) > kConjugateTol) {
        throw ParseError("entry (" + std::to_string(r) + "," +
                             std::to_string(c) +
                             ") conflicts with the conjugate of (" +
                             std::to_string(c) + "," + std::to_string(r) +
                             ") from line " +
                             std::to_string(mirror->second.second),
                         l.number);
      }
    }
    const auto ri = static_cast<Eigen::Index>(r);
    const auto ci = static_cast<Eigen::Index>(c);
    rho(ri, ci) = v;
    rho(ci, ri) = r == c ? Complex(v.real(), 0.0) : std::conj(v);
  }
  try {
    return MixedState(*layout, rho);
  } catch (const Error& e) {
    throw ParseError(e.what(), last);
  }
}

AnyState parse_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  try {
    return parse_state(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_state(const AnyState& state) {
  const auto& layout = layout_of(state);
  std::string out = "mpstate 1\nparties";
  for (const auto& p : layout.parties()) out += " " + p;
  out += "\ndims";
  for (int d : layout.dims()) out += " " + std::to_string(d);
  if (const auto* p = std::get_if<PureState>(&state)) {
    out += "\nkind pure\n";
    const auto& a = p->amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) == Complex(0.0, 0.0)) continue;
      out += "amp " + std::to_string(i) + " " + fmt(a(i).real()) + " " +
             fmt(a(i).imag()) + "\n";
    }
    return out;
  }
  out += "\nkind mixed\n";
  const auto& m = std::get<MixedState>(state).matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = r; c < m.cols(); ++c) {
      if (m(r, c) == Complex(0.0, 0.0)) continue;
      out += "rho " + std::to_string(r) + " " + std::to_string(c) + " " +
             fmt(m(r, c).real()) + " " + fmt(r == c ? 0.0 : m(r, c).imag()) +
             "\n";
    }
  }
  return out;
}

void write_state_file(const std::string& path, const AnyState& state) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << serialize_state(state);
}

}  // namespace mprates::io
