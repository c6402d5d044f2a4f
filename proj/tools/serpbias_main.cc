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

// Command line entry point. Usage:
//   serpbias validate --input serps.jsonl
//   serpbias evaluate --input serps.jsonl --mode ideology --output markdown
//   serpbias compare --input serps.jsonl --measures p,rbp
//   serpbias baselines --input serps.jsonl --baseline rkl --step 1

#include <iostream>
#include <string>
#include <vector>

#include "serpbias/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return serpbias::RunCli(args, std::cin, std::cout, std::cerr);
}
