/*
 * Copyright 2026 The monopath Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MONOPATH_CLI_HPP
#define MONOPATH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace monopath {

namespace exit_code {
inline constexpr int verified = 0;
inline constexpr int property_fails = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
}  // namespace exit_code

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monopath

#endif  // MONOPATH_CLI_HPP
