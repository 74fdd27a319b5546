/*
Copyright 2026 The mcsp-dd Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "mcsp/instance.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace mcsp {
namespace {

bool is_symbol(unsigned char c) { return c > 0x20 && c < 0x7f; }

std::string describe(unsigned char c) {
  if (is_symbol(c)) return std::string("'") + static_cast<char>(c) + "'";
  std::ostringstream out;
  out << "byte 0x" << std::hex << static_cast<int>(c);
  return out.str();
}

void check_symbols(std::string_view s, const char* which) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (!is_symbol(c)) {
      throw MalformedInput(std::string("illegal ") + describe(c) + " in " +
                           which + " at position " + std::to_string(i));
    }
  }
}

std::string_view rstrip(std::string_view line) {
  while (!line.empty() &&
         (line.back() == ' ' || line.back() == '\t' || line.back() == '\r' ||
          line.back() == '\v' || line.back() == '\f')) {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace

bool is_related(std::string_view s1, std::string_view s2) {
  if (s1.size() != s2.size()) return false;
  std::array<long, 256> balance{};
  for (unsigned char c : s1) ++balance[c];
  for (unsigned char c : s2) --balance[c];
  return std::all_of(balance.begin(), balance.end(),
                     [](long b) { return b == 0; });
}

Instance::Instance(std::string s1, std::string s2)
    : s1_(std::move(s1)), s2_(std::move(s2)) {
  if (s1_.empty() || s2_.empty()) {
    throw MalformedInput("instance strings must be non-empty");
  }
  check_symbols(s1_, "s1");
  check_symbols(s2_, "s2");
  if (s1_.size() != s2_.size()) {
    throw UnrelatedStrings("length mismatch: |s1| = " +
                           std::to_string(s1_.size()) + ", |s2| = " +
                           std::to_string(s2_.size()));
  }
  std::array<long, 256> count1{};
  std::array<long, 256> count2{};
  for (unsigned char c : s1_) ++count1[c];
  for (unsigned char c : s2_) ++count2[c];
  // Report the first symbol, in s1-then-s2 reading order, whose counts differ.
  for (const std::string* s : {&s1_, &s2_}) {
    for (unsigned char c : *s) {
      if (count1[c] != count2[c]) {
        throw UnrelatedStrings("symbol " + describe(c) + " occurs " +
                               std::to_string(count1[c]) + " times in s1 but " +
                               std::to_string(count2[c]) + " times in s2");
      }
    }
  }
  for (int c = 0; c < 256; ++c) {
    if (count1[c] > 0) alphabet_.push_back(static_cast<char>(c));
  }
}

Instance parse_instance(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    lines.push_back(rstrip(text.substr(0, eol)));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2) {
    throw MalformedInput("expected two non-empty lines, found " +
                         std::to_string(lines.size()));
  }
  if (lines.size() > 2) {
    throw MalformedInput("expected exactly two lines, found " +
                         std::to_string(lines.size()));
  }
  if (lines[0].empty() || lines[1].empty()) {
    throw MalformedInput("instance lines must be non-empty");
  }
  return Instance(std::string(lines[0]), std::string(lines[1]));
}

std::string serialize_instance(const Instance& instance) {
  return instance.s1() + "\n" + instance.s2() + "\n";
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const MalformedInput& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  } catch (const UnrelatedStrings& e) {
    throw UnrelatedStrings(path.string() + ": " + e.what());
  }
}

std::vector<std::filesystem::path> collect_instance_files(
    const std::vector<std::filesystem::path>& paths) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& path : paths) {
    if (!fs::is_directory(path)) {
      files.push_back(path);
      continue;
    }
    std::vector<fs::path> found;
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      if (entry.path().filename().string().starts_with(".")) continue;
      found.push_back(entry.path());
    }
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  return files;
}

}  // namespace mcsp
