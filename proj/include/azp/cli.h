// Copyright 2026 The AZP Augment Authors.
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

#ifndef AZP_CLI_H_
#define AZP_CLI_H_

namespace azp {

enum ExitCode {
  kExitOk = 0,
  kExitValidation = 1,
  kExitRuntime = 2,
};

// Entry point of the `azp` tool. Returns the process exit code.
int RunCli(int argc, char **argv);

}  // namespace azp

#endif  // AZP_CLI_H_
