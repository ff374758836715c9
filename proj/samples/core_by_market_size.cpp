// Copyright 2026 The pfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builds the uniform-belief game for a few market sizes, prints the per-capita
// core margins, and checks the equal split.

#include <iostream>

#include "pfg/core.hpp"
#include "pfg/values.hpp"

int main() {
  for (int n : {2, 5, 10, 11, 12}) {
    const pfg::SymmetricGame game = pfg::build_game(n, pfg::uniform_family());
    const pfg::CoreVerdict verdict = pfg::rajan_core_nonempty(game);
    std::cout << "n = " << n << ": core " << (verdict.nonempty ? "non-empty" : "empty");
    if (!verdict.nonempty) {
      std::cout << ", singleton margin " << pfg::to_decimal(verdict.margin(1), 6);
    }
    const auto split = pfg::allocation_in_core(game, pfg::equal_split(game));
    std::cout << ", equal split " << (split.in_core ? "in core" : "blocked") << "\n";
  }
}
