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

#ifndef NASHLAB_GAME_IO_H_
#define NASHLAB_GAME_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "nashlab/game.h"
#include "nashlab/profile.h"

namespace nashlab {

using Json = nlohmann::ordered_json;

// {"players": p, "strategies": [n_1, ...], "utilities": [T_1, ...]} where
// each T_i nests one array level per player (player 1 outermost) and every
// leaf is a canonical "num/den" string.
Json game_to_json(const Game& g);
Game game_from_json(const Json& j);

Game read_game(const std::filesystem::path& path);
void write_game(const Game& g, const std::filesystem::path& path);

// Profiles as one array per player.
Json profile_to_json(const RationalProfile& x);
Json profile_to_json(const FloatProfile& x);
RationalProfile rational_profile_from_json(const Json& j);
FloatProfile float_profile_from_json(const Json& j);

Json support_to_json(const Support& s);

Json read_json(const std::filesystem::path& path);
// Two-space indent plus trailing newline; byte-stable for identical input.
void write_json(const Json& j, const std::filesystem::path& path);

}  // namespace nashlab

#endif  // NASHLAB_GAME_IO_H_
