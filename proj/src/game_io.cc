// Copyright 2026 The nashlab Authors
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

#include "nashlab/game_io.h"

#include <fstream>
#include <sstream>

#include "nashlab/errors.h"

namespace nashlab {

namespace {

Json nest(const std::vector<Rational>& flat, const std::vector<int>& counts,
          std::size_t level, std::size_t& pos) {
  Json arr = Json::array();
  for (int s = 0; s < counts[level]; ++s) {
    if (level + 1 == counts.size()) {
      arr.push_back(to_string(flat[pos++]));
    } else {
      arr.push_back(nest(flat, counts, level + 1, pos));
    }
  }
  return arr;
}

void flatten(const Json& node, const std::vector<int>& counts,
             std::size_t level, std::vector<Rational>& out) {
  if (!node.is_array() ||
      node.size() != static_cast<std::size_t>(counts[level])) {
    throw ArgumentError("utility tensor shape does not match \"strategies\"");
  }
  for (const auto& child : node) {
    if (level + 1 == counts.size()) {
      if (!child.is_string()) {
        throw ArgumentError("utilities must be \"num/den\" strings");
      }
      out.push_back(parse_rational(child.get<std::string>()));
    } else {
      flatten(child, counts, level + 1, out);
    }
  }
}

}  // namespace

Json game_to_json(const Game& g) {
  Json j;
  j["players"] = g.num_players();
  j["strategies"] = g.strategy_counts();
  Json utils = Json::array();
  for (int i = 0; i < g.num_players(); ++i) {
    std::size_t pos = 0;
    utils.push_back(nest(g.tensor(i), g.strategy_counts(), 0, pos));
  }
  j["utilities"] = std::move(utils);
  return j;
}

Game game_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ArgumentError("game JSON must be an object");
    const int p = j.at("players").get<int>();
    auto counts = j.at("strategies").get<std::vector<int>>();
    const auto& utils = j.at("utilities");
    if (static_cast<int>(counts.size()) != p || !utils.is_array() ||
        static_cast<int>(utils.size()) != p) {
      throw ArgumentError("\"players\" disagrees with strategies/utilities");
    }
    for (int n : counts) {
      if (n < 2) throw ArgumentError("every player needs at least 2 strategies");
    }
    std::vector<std::vector<Rational>> tensors(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) flatten(utils[i], counts, 0, tensors[i]);
    return Game(std::move(counts), std::move(tensors));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed game JSON: ") + e.what());
  }
}

Game read_game(const std::filesystem::path& path) {
  return game_from_json(read_json(path));
}

void write_game(const Game& g, const std::filesystem::path& path) {
  write_json(game_to_json(g), path);
}

Json profile_to_json(const RationalProfile& x) {
  Json j = Json::array();
  for (int i = 0; i < x.num_players(); ++i) {
    Json blk = Json::array();
    for (const auto& c : x.block(i)) blk.push_back(to_string(c));
    j.push_back(std::move(blk));
  }
  return j;
}

Json profile_to_json(const FloatProfile& x) {
  Json j = Json::array();
  for (int i = 0; i < x.num_players(); ++i) {
    Json blk = Json::array();
    for (double c : x.block(i)) blk.push_back(c);
    j.push_back(std::move(blk));
  }
  return j;
}

RationalProfile rational_profile_from_json(const Json& j) {
  if (!j.is_array()) throw ArgumentError("profile must be an array of arrays");
  std::vector<int> sizes;
  std::vector<Rational> coords;
  for (const auto& blk : j) {
    if (!blk.is_array()) throw ArgumentError("profile block must be an array");
    sizes.push_back(static_cast<int>(blk.size()));
    for (const auto& c : blk) {
      if (!c.is_string()) throw ArgumentError("rational coordinates are strings");
      coords.push_back(parse_rational(c.get<std::string>()));
    }
  }
  return RationalProfile(std::move(sizes), std::move(coords));
}

FloatProfile float_profile_from_json(const Json& j) {
  if (!j.is_array()) throw ArgumentError("profile must be an array of arrays");
  std::vector<int> sizes;
  std::vector<double> coords;
  for (const auto& blk : j) {
    if (!blk.is_array()) throw ArgumentError("profile block must be an array");
    sizes.push_back(static_cast<int>(blk.size()));
    for (const auto& c : blk) {
      if (c.is_string()) {
        coords.push_back(parse_rational(c.get<std::string>()).get_d());
      } else if (c.is_number()) {
        coords.push_back(c.get<double>());
      } else {
        throw ArgumentError("profile coordinate must be a number");
      }
    }
  }
  return FloatProfile(std::move(sizes), std::move(coords));
}

Json support_to_json(const Support& s) {
  Json j = Json::array();
  for (const auto& blk : s) j.push_back(blk);
  return j;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(path.string() + ": " + e.what());
  }
}

void write_json(const Json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace nashlab
