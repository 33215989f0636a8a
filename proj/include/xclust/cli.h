/*
Copyright 2026 The xclust Authors

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

#ifndef XCLUST_CLI_H_
#define XCLUST_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace xclust {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // well-formed input, negative answer
inline constexpr int kExitError = 2;     // usage or input error

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Never throws.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace xclust

#endif  // XCLUST_CLI_H_
