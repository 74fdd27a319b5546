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

#ifndef MCSP_INSTANCE_H_
#define MCSP_INSTANCE_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcsp {

// Base for every error raised while reading or constructing an instance.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text does not have the two-line shape, or holds illegal bytes.
class MalformedInput : public InputError {
 public:
  using InputError::InputError;
};

// The two strings differ in length or in some symbol's occurrence count.
class UnrelatedStrings : public InputError {
 public:
  using InputError::InputError;
};

// True iff the strings have equal length and equal per-symbol counts.
bool is_related(std::string_view s1, std::string_view s2);

// A pair of related, non-empty strings over single-byte symbols.
//
// Immutable after construction; the constructor enforces every invariant
// (equal length >= 1, relatedness, printable non-whitespace symbols).
class Instance {
 public:
  Instance(std::string s1, std::string s2);

  const std::string& s1() const { return s1_; }
  const std::string& s2() const { return s2_; }
  int n() const { return static_cast<int>(s1_.size()); }

  // Distinct symbols of s1, ascending by byte value.
  const std::string& alphabet() const { return alphabet_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::string s1_;
  std::string s2_;
  std::string alphabet_;
};

// Reads the two-line instance format. LF or CRLF line ends, trailing
// whitespace on each line and trailing blank lines are accepted.
Instance parse_instance(std::string_view text);

// Inverse of parse_instance: "s1\ns2\n".
std::string serialize_instance(const Instance& instance);

// Reads and parses one instance file. Unreadable files raise MalformedInput.
Instance load_instance_file(const std::filesystem::path& path);

// Expands files and directories (recursively) into a sorted list of
// instance file paths. Hidden files are skipped.
std::vector<std::filesystem::path> collect_instance_files(
    const std::vector<std::filesystem::path>& paths);

}  // namespace mcsp

#endif  // MCSP_INSTANCE_H_
