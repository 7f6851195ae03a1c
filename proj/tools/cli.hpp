// SPDX-License-Identifier: Apache-2.0
//
// sscm - scene-specific channel modelling toolkit
// Copyright (C) 2026 The sscm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#ifndef SSCM_TOOLS_CLI_HPP
#define SSCM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sscm::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_usage = 1;
    inline constexpr int exit_data = 2;

    // Runs the command line given by args (args[0] is the program name). Results go to out, diagnostics to err.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif
