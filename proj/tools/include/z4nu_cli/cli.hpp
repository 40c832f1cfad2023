/*
   Copyright 2026 The z4nu Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "z4nu/oracle.hpp"

namespace z4nu::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kNotAUnit = 2,
  kSizeLimit = 3,
  kExampleMismatch = 4,
  kNoCanonicalForm = 5,
};

struct JobSpec {
  std::string theta;
  std::string unit;
  std::size_t length = 0;
  std::vector<std::string> generators;
  std::string command;
  bool pretty = false;
  bool dump_elements = false;
  unsigned max_size = kDefaultOracleLog2;
};

/// A fixed code with its published reversibility verdict.
struct ReferenceExample {
  std::string name;
  std::string theta;
  std::string unit;
  std::size_t length;
  std::vector<std::string> generators;
  bool expected_reversible;
  /// Condition id expected to fail in the structural breakdown, if any.
  std::string expected_failing_condition;
};

/// The four worked examples; the third uses the nu*(z-1) reading of its second generator.
const std::vector<ReferenceExample>& reference_examples();
/// The literal z-1 reading of the third example's second generator.
const ReferenceExample& example3_literal_reading();

/// Executes a job, writing one JSON document (or text with `pretty`) to `out`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses command-line flags into a job and runs it.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace z4nu::cli
