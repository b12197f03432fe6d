// Copyright 2026 The gamecap Authors.
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

// JSON documents for games, correlation tables, channels, codebooks, reports.
// All probability tensors are flattened row-major with party 1 most
// significant.

#ifndef GAMECAP_SERIALIZE_H_
#define GAMECAP_SERIALIZE_H_

#include <string>

#include <nlohmann/json.hpp>

#include "gamecap/capacity.h"
#include "gamecap/channels.h"
#include "gamecap/correlations.h"
#include "gamecap/games.h"
#include "gamecap/simulate.h"

namespace gamecap {

using Json = nlohmann::json;

// {"name", "num_parties", "question_sizes", "answer_sizes"} plus either
// "builtin": "chsh" | "magic-square" | "parity" or
// "winning": [[[q...], [a...]], ...]. Unlisted tuples lose. Throws
// InvalidArgument on malformed documents, out-of-range or duplicate tuples.
Game game_from_spec(const Json& doc);
// Explicit winning-tuple form.
Json game_to_spec(const Game& game);

Json table_to_json(const CorrelationTable& table);
CorrelationTable table_from_json(const Json& doc);

Json channel_to_json(const Channel& channel);
Channel channel_from_json(const Json& doc);

Json report_to_json(const GameChannelReport& report);
Json capacity_to_json(const CapacityResult& result);

Json codebook_to_json(const Codebook& codebook);
Codebook codebook_from_json(const Json& doc);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gamecap

#endif  // GAMECAP_SERIALIZE_H_
