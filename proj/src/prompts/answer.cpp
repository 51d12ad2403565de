// SPDX-FileCopyrightText: Copyright (c) 2026 The atomprior Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "atomprior/prompts.hpp"

namespace atomprior::prompts {

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::MissingAnswerTag:
      return "MissingAnswerTag";
    case ParseErrorKind::MissingConfidenceTag:
      return "MissingConfidenceTag";
    case ParseErrorKind::UnparsableNumber:
      return "UnparsableNumber";
  }
  return "?";
}

AnswerParseError::AnswerParseError(ParseErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

//! Content of the last complete <tag>...</tag>, matched case-insensitively.
std::optional<std::string> last_tag(std::string_view text, const std::string& low, const std::string& tag) {
  const std::string open = "<" + tag + ">";
  const std::string close = "</" + tag + ">";
  std::size_t pos = low.rfind(open);
  while (pos != std::string::npos) {
    const std::size_t start = pos + open.size();
    const std::size_t end = low.find(close, start);
    if (end != std::string::npos) {
      return trim(text.substr(start, end - start));
    }
    if (pos == 0) {
      break;
    }
    pos = low.rfind(open, pos - 1);
  }
  return std::nullopt;
}

double parse_number(const std::string& s, const char* what, std::vector<std::string>& warnings) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || !std::isfinite(v)) {
    throw AnswerParseError(ParseErrorKind::UnparsableNumber, std::string(what) + " '" + s + "'");
  }
  if (trim(end) != "" && trim(end) != "%") {
    warnings.push_back(std::string(what) + ": trailing text '" + trim(end) + "' ignored");
  }
  return v;
}

}  // namespace

ParsedAnswer parse_answer(std::string_view response, TaskKind kind) {
  const std::string low = lower(response);
  ParsedAnswer out;
  if (auto a = last_tag(response, low, "analysis")) {
    out.analysis = *a;
  }

  if (kind == TaskKind::Regression) {
    const auto pred = last_tag(response, low, "prediction");
    if (!pred) {
      throw AnswerParseError(ParseErrorKind::MissingAnswerTag, "no <prediction> tag");
    }
    out.value = parse_number(*pred, "prediction", out.warnings);
    return out;
  }

  const auto ans = last_tag(response, low, "answer");
  if (!ans) {
    throw AnswerParseError(ParseErrorKind::MissingAnswerTag, "no <answer> tag");
  }
  const std::string label = lower(*ans);
  if (label != "yes" && label != "no") {
    throw AnswerParseError(ParseErrorKind::MissingAnswerTag, "answer is '" + *ans + "', expected yes or no");
  }
  out.label = label == "yes";

  const auto conf = last_tag(response, low, "confidence");
  if (!conf) {
    throw AnswerParseError(ParseErrorKind::MissingConfidenceTag, "no <confidence> tag");
  }
  double c = parse_number(*conf, "confidence", out.warnings);
  if (c != std::floor(c)) {
    out.warnings.push_back("confidence " + *conf + " rounded to an integer");
    c = std::round(c);
  }
  if (c < 0.0 || c > 100.0) {
    out.warnings.push_back("confidence " + *conf + " clamped to [0, 100]");
    c = std::clamp(c, 0.0, 100.0);
  }
  out.confidence = static_cast<int>(c);
  out.conflict = (*out.label && *out.confidence <= 50) || (!*out.label && *out.confidence >= 50);
  return out;
}

}  // namespace atomprior::prompts
