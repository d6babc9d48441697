// Copyright 2023 The Authors.
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

#ifndef TUTTECERT_CLI_H_
#define TUTTECERT_CLI_H_

#include <ostream>

namespace tuttecert {

// Exit codes: 0 success or PASS, 1 FAIL verdict, 2 usage or input error.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tuttecert

#endif  // TUTTECERT_CLI_H_
