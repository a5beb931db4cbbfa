// Copyright 2026 The UIRMiner Authors.
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

#ifndef UIRMINER_TOOLS_CLI_HPP
#define UIRMINER_TOOLS_CLI_HPP

#include <ostream>

namespace uirminer {

// Entry point of the uirminer tool; stdout/stderr are injectable for tests.
// Exit codes: 0 success, 1 verify found differences, 2 usage or input error.
int runCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

} // namespace uirminer

#endif // UIRMINER_TOOLS_CLI_HPP
