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

#include "kbopt/geometry.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "kbopt/error.hpp"

namespace kbopt {

using nlohmann::ordered_json;

const char* to_string(Hand hand) { return hand == Hand::kLeft ? "left" : "right"; }
const char* to_string(Layer layer) { return layer == Layer::kBase ? "base" : "shift"; }

void KeyboardGeometry::validate() const {
  std::set<std::string_view> ids;
  bool left_base = false;
  bool right_base = false;
  for (const auto& key : keys) {
    if (key.id.empty()) throw Error(ErrorCode::kGeometry, name + ": empty key id");
    if (!ids.insert(key.id).second) {
      throw Error(ErrorCode::kGeometry, name + ": duplicate key id '" + key.id + "'");
    }
    if (!(key.effort > 0.0)) {
      throw Error(ErrorCode::kGeometry, name + ": key '" + key.id + "' has non-positive effort");
    }
    if (key.layer == Layer::kBase) (key.hand == Hand::kLeft ? left_base : right_base) = true;
  }
  if (!left_base || !right_base) {
    throw Error(ErrorCode::kGeometry, name + ": each hand needs at least one base-layer key");
  }
}

const Key* KeyboardGeometry::find(std::string_view key_id) const {
  const auto it = std::find_if(keys.begin(), keys.end(),
                               [key_id](const Key& k) { return k.id == key_id; });
  return it == keys.end() ? nullptr : &*it;
}

std::vector<const Key*> KeyboardGeometry::fill_order(Hand hand) const {
  std::vector<const Key*> out;
  for (const auto& key : keys) {
    if (key.hand == hand) out.push_back(&key);
  }
  std::sort(out.begin(), out.end(), [](const Key* a, const Key* b) {
    if (a->layer != b->layer) return a->layer == Layer::kBase;
    if (a->effort != b->effort) return a->effort < b->effort;
    return a->id < b->id;
  });
  return out;
}

namespace {

// Outer column first on each hand: pinky, ring, middle, index, index stretch.
constexpr const char* kFingers[5] = {"pinky", "ring", "middle", "index", "index"};
constexpr double kFingerEffort[5] = {1.8, 1.4, 1.1, 1.0, 1.0};
constexpr double kStretch[5] = {0.0, 0.0, 0.0, 0.0, 0.5};
constexpr double kRowPenalty[3] = {0.6, 0.0, 0.9};  // top, home, bottom
constexpr double kShiftPenalty = 2.0;

KeyboardGeometry make_default_3row() {
  KeyboardGeometry g{"default-3row", {}};
  for (Layer layer : {Layer::kBase, Layer::kShift}) {
    for (int row = 1; row <= 3; ++row) {
      for (int column = 1; column <= 10; ++column) {
        const Hand hand = column <= 5 ? Hand::kLeft : Hand::kRight;
        // Distance from the outer edge of the half: 0 = pinky column.
        const int outer = hand == Hand::kLeft ? column - 1 : 10 - column;
        Key key;
        key.id = (hand == Hand::kLeft ? "L" : "R") + std::to_string(row) + "C" +
                 std::to_string(column) + (layer == Layer::kShift ? "s" : "");
        key.hand = hand;
        key.row = row;
        key.column = column;
        key.finger = kFingers[outer];
        key.effort = kFingerEffort[outer] + kStretch[outer] + kRowPenalty[row - 1] +
                     (layer == Layer::kShift ? kShiftPenalty : 0.0);
        key.layer = layer;
        g.keys.push_back(std::move(key));
      }
    }
  }
  return g;
}

KeyboardGeometry make_test_2key() {
  return KeyboardGeometry{"test-2key",
                          {{"L", Hand::kLeft, 1, 1, "index", 1.0, Layer::kBase},
                           {"R", Hand::kRight, 1, 2, "index", 1.0, Layer::kBase}}};
}

template <typename T>
T required(const ordered_json& object, const char* field, std::string_view source) {
  if (!object.is_object() || !object.contains(field)) {
    throw Error(ErrorCode::kMalformed,
                std::string(source) + ": missing field '" + field + "'");
  }
  try {
    return object.at(field).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kMalformed,
                std::string(source) + ": field '" + field + "' has the wrong type");
  }
}

}  // namespace

KeyboardGeometry builtin_geometry(std::string_view name) {
  if (name == "default-3row") return make_default_3row();
  if (name == "test-2key") return make_test_2key();
  throw Error(ErrorCode::kGeometry, "unknown built-in geometry '" + std::string(name) + "'");
}

std::vector<std::string> builtin_geometry_names() { return {"default-3row", "test-2key"}; }

KeyboardGeometry parse_geometry(std::string_view json, std::string_view source) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kMalformed, std::string(source) + ": " + e.what());
  }
  KeyboardGeometry g;
  g.name = required<std::string>(doc, "name", source);
  const auto keys = required<ordered_json>(doc, "keys", source);
  if (!keys.is_array()) throw Error(ErrorCode::kMalformed, std::string(source) + ": 'keys' must be a list");
  for (const auto& entry : keys) {
    Key key;
    key.id = required<std::string>(entry, "key_id", source);
    const auto hand = required<std::string>(entry, "hand", source);
    if (hand != "left" && hand != "right") {
      throw Error(ErrorCode::kMalformed, std::string(source) + ": hand must be left or right");
    }
    key.hand = hand == "left" ? Hand::kLeft : Hand::kRight;
    key.row = required<int>(entry, "row", source);
    key.column = required<int>(entry, "column", source);
    key.finger = required<std::string>(entry, "finger", source);
    key.effort = required<double>(entry, "effort", source);
    const auto layer = required<std::string>(entry, "layer", source);
    if (layer != "base" && layer != "shift") {
      throw Error(ErrorCode::kMalformed, std::string(source) + ": layer must be base or shift");
    }
    key.layer = layer == "base" ? Layer::kBase : Layer::kShift;
    g.keys.push_back(std::move(key));
  }
  g.validate();
  return g;
}

std::string geometry_json(const KeyboardGeometry& geometry) {
  ordered_json doc;
  doc["name"] = geometry.name;
  doc["keys"] = ordered_json::array();
  for (const auto& key : geometry.keys) {
    ordered_json k;
    k["key_id"] = key.id;
    k["hand"] = to_string(key.hand);
    k["row"] = key.row;
    k["column"] = key.column;
    k["finger"] = key.finger;
    k["effort"] = key.effort;
    k["layer"] = to_string(key.layer);
    doc["keys"].push_back(std::move(k));
  }
  return doc.dump(2) + "\n";
}

}  // namespace kbopt
