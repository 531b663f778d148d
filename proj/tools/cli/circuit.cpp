// Copyright 2026 The psgraph Authors
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

#include "cli/circuit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "psgraph/errors.hpp"

namespace psgraph::cli {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidArgument("circuit line " + std::to_string(line) + ": " + what);
}

std::size_t to_index(const std::string& s, std::size_t line) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) fail(line, "bad index '" + s + "'");
  return v;
}

double to_real(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(line, "bad number '" + s + "'");
  }
  if (used != s.size()) fail(line, "bad number '" + s + "'");
  return v;
}

// "0.5", "-1", "0.5i", "0.5-0.5i".
Complex to_complex(const std::string& s, std::size_t line) {
  if (s.empty()) fail(line, "empty amplitude");
  if (s.back() != 'i') return to_real(s, line);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') split = k;
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+" || body == "-") return {0.0, body == "-" ? -1.0 : 1.0};
    return {0.0, to_real(body, line)};
  }
  const std::string im = body.substr(split);
  return {to_real(body.substr(0, split), line),
          im.size() == 1 ? (im == "-" ? -1.0 : 1.0) : to_real(im, line)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

Circuit Circuit::parse(const std::string& text) {
  Circuit c;
  std::size_t modes = 0;
  bool have_state = false;
  std::istringstream lines(text);
  std::string raw;
  std::size_t line = 0;
  auto qubit = [&](const std::string& s) {
    const std::size_t q = to_index(s, line);
    if (2 * q + 1 >= modes) fail(line, "qubit " + s + " needs modes beyond " + std::to_string(modes));
    return q;
  };
  auto rails = [&](std::size_t q) { return Rails{2 * q, 2 * q + 1}; };

  while (std::getline(lines, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream is(raw);
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& head = tok[0];

    if (head == "modes") {
      if (modes) fail(line, "repeated modes line");
      if (tok.size() != 2) fail(line, "expected 'modes M'");
      modes = to_index(tok[1], line);
      if (modes == 0 || modes > kMaxModes) {
        throw GuardExceeded("circuit line " + std::to_string(line) + ": modes must be 1.." +
                            std::to_string(kMaxModes));
      }
      continue;
    }
    if (!modes) fail(line, "'modes' must come first");
    if (head == "state" || head == "plus") {
      if (have_state) fail(line, "initial state given twice");
      if (!c.transfers.empty()) fail(line, "initial state after a gate");
      have_state = true;
      if (head == "state") {
        if (tok.size() != 2) fail(line, "expected 'state occ:amp,...'");
        c.initial = FockVector(modes);
        for (const std::string& term : split(tok[1], ',')) {
          const auto colon = term.find(':');
          if (colon == std::string::npos) fail(line, "term '" + term + "' lacks ':'");
          const std::string occ = term.substr(0, colon);
          if (occ.size() != modes) fail(line, "occupation '" + occ + "' has the wrong length");
          Occupation o;
          for (char ch : occ) {
            if (ch < '0' || ch > '9') fail(line, "bad occupation '" + occ + "'");
            o.push_back(static_cast<std::uint8_t>(ch - '0'));
          }
          c.initial.add(o, to_complex(term.substr(colon + 1), line));
        }
      } else {
        if (tok.size() < 2) fail(line, "expected 'plus q...'");
        c.initial = FockVector::vacuum(modes);
        std::vector<bool> used(modes / 2, false);
        for (std::size_t k = 1; k < tok.size(); ++k) {
          const std::size_t q = qubit(tok[k]);
          if (used[q]) fail(line, "qubit " + tok[k] + " listed twice");
          used[q] = true;
          FockVector next(modes);
          for (const auto& [o, a] : c.initial.terms()) {
            for (std::size_t rail : {2 * q, 2 * q + 1}) {
              Occupation p = o;
              p[rail] = 1;
              next.add(p, a * std::sqrt(0.5));
            }
          }
          c.initial = next;
        }
      }
    } else if (head == "gate") {
      if (tok.size() != 4) fail(line, "expected 'gate cz|fusion i j'");
      const std::size_t i = qubit(tok[2]), j = qubit(tok[3]);
      if (i == j) fail(line, "gate on one qubit");
      const std::vector<std::size_t> placed{2 * i, 2 * i + 1, 2 * j, 2 * j + 1};
      if (tok[1] == "cz") {
        c.transfers.push_back(cz_lo_subunitary().placed(placed));
      } else if (tok[1] == "fusion") {
        c.transfers.push_back(fusion_transfer().placed(placed));
      } else {
        fail(line, "unknown gate '" + tok[1] + "'");
      }
    } else if (head == "lc") {
      if (tok.size() < 2) fail(line, "expected 'lc a [neighbours...]'");
      const std::size_t a = qubit(tok[1]);
      std::vector<Rails> nb;
      for (std::size_t k = 2; k < tok.size(); ++k) {
        const std::size_t q = qubit(tok[k]);
        if (q == a) fail(line, "qubit is its own neighbour");
        nb.push_back(rails(q));
      }
      for (ModeTransfer& t : lc_transfer(rails(a), nb)) c.transfers.push_back(std::move(t));
    } else if (head == "project") {
      if (c.projected) fail(line, "repeated project line");
      std::vector<std::size_t> keep;
      for (std::size_t k = 1; k < tok.size(); ++k) keep.push_back(qubit(tok[k]));
      if (keep.empty()) {
        for (std::size_t q = 0; q < modes / 2; ++q) keep.push_back(q);
      }
      c.projected = keep;
    } else {
      fail(line, "unknown statement '" + head + "'");
    }
    if (c.projected && head != "project") fail(line, "statement after project");
  }
  if (!modes) throw InvalidArgument("circuit: missing 'modes' line");
  if (!have_state) throw InvalidArgument("circuit: missing initial state");
  return c;
}

CircuitRun run_circuit(const Circuit& c) {
  FockVector s = c.initial;
  for (const ModeTransfer& t : c.transfers) s = apply_transfer(s, t);
  if (c.projected) {
    QubitLayout layout;
    for (std::size_t q : *c.projected) layout.qubits.push_back({2 * q, 2 * q + 1});
    layout.validate(s.modes());
    s = project_qubit_subspace(s, layout);
  }
  return {s, s.squared_norm()};
}

}  // namespace psgraph::cli
