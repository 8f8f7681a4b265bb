// Copyright 2026 The multihol authors
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

#include "multihol/spec_file.hpp"

#include <fstream>
#include <sstream>

namespace multihol {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::size_t parse_factor_index(const std::string& s, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != s.size() || v == 0) {
    throw InputError("line " + std::to_string(line_no) + ": bad factor index '" + s + "'");
  }
  return static_cast<std::size_t>(v - 1);  // one-based in the file
}

}  // namespace

GroupSpecFile parse_group_spec(const std::string& text) {
  GroupSpecFile spec;
  enum class Section { None, Factor, Amalgamate, Analysis };
  Section section = Section::None;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line == "[factor]") {
        section = Section::Factor;
        spec.factors.emplace_back();
      } else if (line == "[amalgamate]") {
        section = Section::Amalgamate;
        spec.amalgamations.emplace_back();
      } else if (line == "[analysis]") {
        section = Section::Analysis;
      } else {
        throw InputError("line " + std::to_string(line_no) + ": unknown section " + line);
      }
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw InputError("line " + std::to_string(line_no) + ": empty value for " + key);
    }

    switch (section) {
      case Section::None:
        throw InputError("line " + std::to_string(line_no) + ": key outside any section");
      case Section::Factor: {
        FactorEntry& f = spec.factors.back();
        if (key == "name") {
          f.builtin_name = value;
        } else if (key == "special_linear") {
          auto parts = split_ws(value);
          if (parts.size() != 2) {
            throw InputError("line " + std::to_string(line_no) +
                             ": special_linear expects DIM Q");
          }
          f.sl_dim = static_cast<unsigned>(std::stoul(parts[0]));
          f.sl_q = static_cast<unsigned>(std::stoul(parts[1]));
        } else {
          throw InputError("line " + std::to_string(line_no) + ": unknown factor key " + key);
        }
        break;
      }
      case Section::Amalgamate: {
        AmalgamateEntry& a = spec.amalgamations.back();
        if (key == "factors" || key == "full") {
          auto parts = split_ws(value);
          if (parts.size() != 2) {
            throw InputError("line " + std::to_string(line_no) + ": " + key + " expects I J");
          }
          a.factor_a = parse_factor_index(parts[0], line_no);
          a.factor_b = parse_factor_index(parts[1], line_no);
          a.full = key == "full";
        } else if (key == "left") {
          a.left_selector = value;
        } else if (key == "right") {
          a.right_selector = value;
        } else {
          throw InputError("line " + std::to_string(line_no) + ": unknown amalgamate key " + key);
        }
        break;
      }
      case Section::Analysis: {
        if (key == "oracle") {
          if (value != "true" && value != "false") {
            throw InputError("line " + std::to_string(line_no) + ": oracle expects true|false");
          }
          spec.analysis.oracle = value == "true";
        } else if (key == "guard") {
          spec.analysis.guard = std::stoull(value);
        } else {
          throw InputError("line " + std::to_string(line_no) + ": unknown analysis key " + key);
        }
        break;
      }
    }
  }

  if (spec.factors.empty()) throw InputError("spec declares no factors");
  for (const FactorEntry& f : spec.factors) {
    if (f.is_builtin() == (f.sl_dim != 0)) {
      throw InputError("each [factor] needs exactly one of name / special_linear");
    }
  }
  for (const AmalgamateEntry& a : spec.amalgamations) {
    if (a.factor_a >= spec.factors.size() || a.factor_b >= spec.factors.size()) {
      throw InputError("amalgamation references a missing factor");
    }
  }
  return spec;
}

GroupSpecFile load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_spec(buf.str());
}

}  // namespace multihol
