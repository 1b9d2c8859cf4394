/*
 * Copyright 2026 the mgsolve authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mg::cli {

/**
 * The mgsolve command line: solve | oracle | check-monotone |
 * check-universal | product | structurate. Returns the process exit
 * status: 0 on success, 1 when a check fails (axiom violation,
 * universality counterexample, no uniform witness), 2 on usage or
 * parse errors. Flags mirror environment variables prefixed MG_.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mg::cli
