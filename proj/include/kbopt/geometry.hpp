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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kbopt {

enum class Hand { kLeft, kRight };
enum class Layer { kBase, kShift };

const char* to_string(Hand hand);
const char* to_string(Layer layer);

struct Key {
  std::string id;
  Hand hand = Hand::kLeft;
  int row = 0;
  int column = 0;
  std::string finger;
  double effort = 1.0;  // lower is easier
  Layer layer = Layer::kBase;

  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyboardGeometry {
  std::string name;
  std::vector<Key> keys;

  // Throws kGeometry unless key ids are unique, efforts positive and each
  // hand owns at least one base-layer key.
  void validate() const;

  const Key* find(std::string_view key_id) const;

  // Keys of one hand in fill order: base layer first, then effort
  // ascending, then key id.
  std::vector<const Key*> fill_order(Hand hand) const;

  friend bool operator==(const KeyboardGeometry&, const KeyboardGeometry&) = default;
};

// "default-3row": 3 rows x 5 columns per hand plus a shift layer.
// "test-2key": one base key per hand.
KeyboardGeometry builtin_geometry(std::string_view name);
std::vector<std::string> builtin_geometry_names();

KeyboardGeometry parse_geometry(std::string_view json, std::string_view source);
std::string geometry_json(const KeyboardGeometry& geometry);

}  // namespace kbopt
