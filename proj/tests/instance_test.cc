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

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "test_support.h"

namespace mcsp {
namespace {

TEST(ParseInstanceTest, WorkedExample) {
  const Instance instance = parse_instance("GAGACTA\nAACTGAG\n");
  EXPECT_EQ(instance.s1(), "GAGACTA");
  EXPECT_EQ(instance.s2(), "AACTGAG");
  EXPECT_EQ(instance.n(), 7);
  EXPECT_EQ(instance.alphabet(), "ACGT");
}

TEST(ParseInstanceTest, MinimalInstance) {
  const Instance instance = parse_instance("A\nA\n");
  EXPECT_EQ(instance.n(), 1);
  EXPECT_EQ(instance.alphabet(), "A");
}

TEST(ParseInstanceTest, CountMismatchIsUnrelated) {
  EXPECT_THROW(parse_instance("AB\nAA\n"), UnrelatedStrings);
  try {
    parse_instance("AB\nAA\n");
  } catch (const UnrelatedStrings& e) {
    EXPECT_NE(std::string(e.what()).find("'A'"), std::string::npos) << e.what();
  }
}

TEST(ParseInstanceTest, LengthMismatchIsUnrelated) {
  EXPECT_THROW(parse_instance("AAB\nAB\n"), UnrelatedStrings);
}

TEST(ParseInstanceTest, AcceptsCrlfTrailingSpaceAndBlankLines) {
  const Instance instance = parse_instance("AB  \r\nBA\t\r\n\r\n\n");
  EXPECT_EQ(instance.s1(), "AB");
  EXPECT_EQ(instance.s2(), "BA");
  EXPECT_EQ(parse_instance("AB\nBA"), instance);
}

TEST(ParseInstanceTest, RejectsMalformedText) {
  EXPECT_THROW(parse_instance(""), MalformedInput);
  EXPECT_THROW(parse_instance("ABC\n"), MalformedInput);
  EXPECT_THROW(parse_instance("\nAB\nBA\n"), MalformedInput);
  EXPECT_THROW(parse_instance("A B\nB A\n"), MalformedInput);
  EXPECT_THROW(parse_instance("AB\nBA\nAB\n"), MalformedInput);
  EXPECT_THROW(parse_instance("A\x01\n\x01" "A\n"), MalformedInput);
  EXPECT_THROW(parse_instance("A\xc3\n\xc3" "A\n"), MalformedInput);
}

TEST(IsRelatedTest, Examples) {
  EXPECT_TRUE(is_related("GAGACTA", "AACTGAG"));
  EXPECT_TRUE(is_related("AB", "BA"));
  EXPECT_FALSE(is_related("AB", "AA"));
  EXPECT_FALSE(is_related("AB", "ABA"));
  EXPECT_TRUE(is_related("", ""));
}

TEST(InstanceTest, ConstructorEnforcesInvariants) {
  EXPECT_THROW(Instance("", ""), MalformedInput);
  EXPECT_THROW(Instance("AB", "AC"), UnrelatedStrings);
  EXPECT_NO_THROW(Instance("ABC", "CAB"));
}

TEST(InstanceTest, SerializeThenParseIsIdentity) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const Instance instance = testing::random_instance(rng, 1, 40);
    EXPECT_EQ(parse_instance(serialize_instance(instance)), instance);
  }
}

class InstanceFilesTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mcsp_instance_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_ / "linear");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  void write(const std::filesystem::path& path, const std::string& text) {
    std::ofstream(path) << text;
  }

  std::filesystem::path dir_;
};

TEST_F(InstanceFilesTest, LoadsFile) {
  write(dir_ / "a.txt", "GAGACTA\nAACTGAG\n");
  EXPECT_EQ(load_instance_file(dir_ / "a.txt").n(), 7);
}

TEST_F(InstanceFilesTest, MissingFileIsMalformed) {
  EXPECT_THROW(load_instance_file(dir_ / "missing.txt"), MalformedInput);
}

TEST_F(InstanceFilesTest, CollectsRecursivelyInSortedOrder) {
  write(dir_ / "b.txt", "A\nA\n");
  write(dir_ / "a.txt", "A\nA\n");
  write(dir_ / "linear" / "c.txt", "A\nA\n");
  write(dir_ / ".hidden", "A\nA\n");
  const auto files = collect_instance_files({dir_});
  ASSERT_EQ(files.size(), 3u);
  EXPECT_EQ(files[0].filename(), "a.txt");
  EXPECT_EQ(files[1].filename(), "b.txt");
  EXPECT_EQ(files[2].filename(), "c.txt");
}

}  // namespace
}  // namespace mcsp
