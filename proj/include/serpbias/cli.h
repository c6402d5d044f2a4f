// Copyright 2026 The serpbias Authors.
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

#ifndef SERPBIAS_CLI_H_
#define SERPBIAS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace serpbias {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitConfigError = 2;

// Runs the command line tool. args excludes the program name. "--input -"
// reads the dataset from `in`. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace serpbias

#endif  // SERPBIAS_CLI_H_
