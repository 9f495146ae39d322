/*
   Copyright 2026 The polya-cert authors

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
#pragma once

namespace polya {

// polya-cert <certify|refute-only|margin|pure-state-scan> <input> [flags].
// Exit status: 0 certified (or a clean scan), 2 refuted, 3 inconclusive,
// 1 usage or input error (message on stderr).
int run_cli(int argc, const char* const* argv);

}  // namespace polya
