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
#include "polya/parallel.hpp"

#include <cstdlib>
#include <string>

namespace polya {

int thread_cap() {
  const unsigned hw = std::thread::hardware_concurrency();
  int cap = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("POLYA_CERT_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested >= 1) cap = std::min(cap, requested);
    } catch (...) {
      // Unparseable values fall back to the hardware default.
    }
  }
  return cap;
}

}  // namespace polya
