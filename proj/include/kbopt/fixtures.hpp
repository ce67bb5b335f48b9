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

#pragma once

#include <string_view>

namespace kbopt {

// The classic nine-transaction, five-item Apriori walkthrough database in
// transaction-file format. Mined at support count 2 it yields
// L1 = {1:6, 2:7, 3:6, 4:2, 5:2}, six frequent pairs and L3 = {123, 125}.
std::string_view sample_transactions();

}  // namespace kbopt
