// Copyright 2026 The kbopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kbopt/fixtures.hpp"

namespace kbopt {

std::string_view sample_transactions() {
  return "# Nine-transaction example database (TIDs T100..T900), one per line.\n"
         "1 2 5\n"
         "2 4\n"
         "2 3\n"
         "1 2 4\n"
         "1 3\n"
         "2 3\n"
         "1 3\n"
         "1 2 3 5\n"
         "1 2 3\n";
}

}  // namespace kbopt
