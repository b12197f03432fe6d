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

#include "gamecap/serialize.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace gamecap {

namespace {

template <typename T>
T get_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidArgument(std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("field '") + key + "': " + e.what());
  }
}

Sizes get_sizes(const Json& doc, const char* key, std::size_t expected) {
  Sizes sizes = get_field<Sizes>(doc, key);
  if (sizes.size() != expected) {
    throw InvalidArgument(std::string("field '") + key + "' has " +
                          std::to_string(sizes.size()) + " entries, expected " +
                          std::to_string(expected));
  }
  for (int s : sizes) {
    if (s <= 0) {
      throw InvalidArgument(std::string("field '") + key +
                            "' must hold positive sizes");
    }
  }
  return sizes;
}

}  // namespace

Game game_from_spec(const Json& doc) {
  if (!doc.is_object()) throw InvalidArgument("game spec must be an object");
  const int k = get_field<int>(doc, "num_parties");
  if (k < 2) throw InvalidArgument("num_parties must be >= 2");
  const std::string name =
      doc.contains("name") ? get_field<std::string>(doc, "name") : "custom";

  const bool has_builtin = doc.contains("builtin");
  const bool has_winning = doc.contains("winning");
  if (has_builtin == has_winning) {
    throw InvalidArgument("game spec needs exactly one of 'builtin' or "
                          "'winning'");
  }

  if (has_builtin) {
    Game game = make_builtin(get_field<std::string>(doc, "builtin"), k);
    if (game.num_parties() != k) {
      throw InvalidArgument("built-in game has " +
                            std::to_string(game.num_parties()) +
                            " parties, spec declares " + std::to_string(k));
    }
    if (doc.contains("question_sizes") &&
        get_sizes(doc, "question_sizes", k) != game.question_sizes()) {
      throw InvalidArgument("question_sizes disagree with the built-in game");
    }
    if (doc.contains("answer_sizes") &&
        get_sizes(doc, "answer_sizes", k) != game.answer_sizes()) {
      throw InvalidArgument("answer_sizes disagree with the built-in game");
    }
    return game;
  }

  const Sizes qs = get_sizes(doc, "question_sizes", k);
  const Sizes as = get_sizes(doc, "answer_sizes", k);
  const Index nq = product(qs);
  const Index na = product(as);
  std::vector<std::uint8_t> winning(nq * na, 0);
  const Json& list = doc.at("winning");
  if (!list.is_array()) throw InvalidArgument("'winning' must be an array");
  for (std::size_t t = 0; t < list.size(); ++t) {
    const Json& entry = list[t];
    if (!entry.is_array() || entry.size() != 2) {
      throw InvalidArgument("winning entry " + std::to_string(t) +
                            " must be [[q...], [a...]]");
    }
    std::vector<int> q;
    std::vector<int> a;
    try {
      q = entry[0].get<std::vector<int>>();
      a = entry[1].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      throw InvalidArgument("winning entry " + std::to_string(t) +
                            " must hold integer tuples");
    }
    Index flat;
    try {
      flat = encode_mixed_radix(q, qs) * na + encode_mixed_radix(a, as);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("winning entry " + std::to_string(t) + ": " +
                            e.what());
    }
    if (winning[flat]) {
      throw InvalidArgument("duplicate winning tuple at entry " +
                            std::to_string(t));
    }
    winning[flat] = 1;
  }
  return Game(name, qs, as, std::move(winning));
}

Json game_to_spec(const Game& game) {
  Json winning = Json::array();
  const auto& qs = game.question_sizes();
  const auto& as = game.answer_sizes();
  for (Index q = 0; q < game.num_question_tuples(); ++q) {
    for (Index a = 0; a < game.num_answer_tuples(); ++a) {
      if (game.is_winning(q, a)) {
        winning.push_back(
            Json::array({decode_mixed_radix(q, qs), decode_mixed_radix(a, as)}));
      }
    }
  }
  return Json{{"name", game.name()},
              {"num_parties", game.num_parties()},
              {"question_sizes", qs},
              {"answer_sizes", as},
              {"winning", std::move(winning)}};
}

Json table_to_json(const CorrelationTable& table) {
  return Json{{"num_parties", table.num_parties()},
              {"question_sizes", table.question_sizes()},
              {"answer_sizes", table.answer_sizes()},
              {"probs", std::vector<double>(table.probs().begin(),
                                            table.probs().end())}};
}

CorrelationTable table_from_json(const Json& doc) {
  const int k = get_field<int>(doc, "num_parties");
  return CorrelationTable(get_sizes(doc, "question_sizes", k),
                          get_sizes(doc, "answer_sizes", k),
                          get_field<std::vector<double>>(doc, "probs"));
}

Json channel_to_json(const Channel& channel) {
  return Json{{"num_tx", channel.num_tx()},
              {"mode", to_string(channel.mode())},
              {"question_sizes", channel.question_sizes()},
              {"answer_sizes", channel.answer_sizes()},
              {"output_sizes", channel.output_sizes()},
              {"probs", std::vector<double>(channel.probs().begin(),
                                            channel.probs().end())}};
}

Channel channel_from_json(const Json& doc) {
  const int k = get_field<int>(doc, "num_tx");
  if (k < 1) throw InvalidArgument("num_tx must be >= 1");
  const ChannelMode mode =
      doc.contains("mode")
          ? channel_mode_from_string(get_field<std::string>(doc, "mode"))
          : ChannelMode::kPerReceiver;
  return Channel(get_sizes(doc, "question_sizes", k),
                 get_sizes(doc, "answer_sizes", k),
                 get_sizes(doc, "output_sizes", k),
                 get_field<std::vector<double>>(doc, "probs"), mode);
}

namespace {

Json finite_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

}  // namespace

Json report_to_json(const GameChannelReport& report) {
  Json receivers = Json::array();
  for (const auto& r : report.receivers) {
    receivers.push_back({{"num_questions", r.num_questions},
                         {"num_outputs", r.num_outputs},
                         {"h_w_bits", r.h_w},
                         {"weakly_symmetric", r.weakly_symmetric},
                         {"winning_subchannel", r.winning_subchannel.probs}});
  }
  Json out{{"passed", report.passed()},
           {"identification", to_string(report.identification)},
           {"receivers", std::move(receivers)},
           {"factorization_residual", report.factorization_residual},
           {"max_winning_entropy_bits", report.max_winning_entropy},
           {"min_losing_entropy_bits", finite_or_null(report.min_losing_entropy)},
           {"strictness_margin_bits", finite_or_null(report.strictness_margin)}};
  if (report.failure) {
    out["failure"] = {{"clause", to_string(report.failure->clause)},
                      {"detail", report.failure->detail}};
  }
  if (report.passed()) {
    out["closed_form_sum_capacity_bits"] = closed_form_sum_capacity(report);
  }
  return out;
}

Json capacity_to_json(const CapacityResult& result) {
  Json starts = Json::array();
  for (const auto& s : result.starts) {
    starts.push_back({{"iterations", s.iterations},
                      {"final_value_bits", s.final_value},
                      {"converged", s.converged}});
  }
  return Json{{"value_bits", result.value},
              {"best_start", result.best_start},
              {"converged_starts", result.converged_starts()},
              {"spread_bits", result.spread()},
              {"argmax", result.argmax},
              {"starts", std::move(starts)}};
}

Json codebook_to_json(const Codebook& codebook) {
  return Json{{"alphabet_size", codebook.alphabet_size},
              {"block_length", codebook.block_length},
              {"codewords", codebook.codewords}};
}

Codebook codebook_from_json(const Json& doc) {
  Codebook book;
  book.alphabet_size = get_field<int>(doc, "alphabet_size");
  book.block_length = get_field<int>(doc, "block_length");
  book.codewords = get_field<std::vector<std::vector<int>>>(doc, "codewords");
  book.validate();
  return book;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw NumericError("write to '" + path + "' failed");
}

}  // namespace gamecap
