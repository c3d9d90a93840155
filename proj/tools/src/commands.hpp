/*
   Copyright 2026 The qtk Authors

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

#ifndef QTK_TOOLS_COMMANDS_HPP
#define QTK_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>

namespace qtk::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kSizeBound = 2, kMismatch = 3 };

struct Options {
  std::string field = "3";
  std::uint64_t n = 1;
  std::string variant = "carlitz";
  std::string sigma;
  std::string expr;
  std::string f;
  std::string order = "quadratic";
  std::string a = "1";
  std::string fields = "2,3,4,5,7,8,9";
  std::uint64_t max_n = 3;
  std::uint64_t seed = 1;
  bool oracle = false;
  bool json = false;
  bool human = false;
  bool monic = false;
};

int cmd_count(const Options& o, std::ostream& os);
int cmd_reduce(const Options& o, std::ostream& os);
int cmd_transform(const Options& o, std::ostream& os);
int cmd_reconstruct(const Options& o, std::ostream& os);
int cmd_dickson(const Options& o, std::ostream& os);
int cmd_hverify(const Options& o, std::ostream& os);
int cmd_table(const Options& o, std::ostream& os);
int cmd_selftest(const Options& o, std::ostream& os);

}  // namespace qtk::cli

#endif  // QTK_TOOLS_COMMANDS_HPP
