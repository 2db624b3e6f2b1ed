#include "plurality/documents.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace plurality {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(end), '\n');
    throw InputError("JSON syntax error at line " + std::to_string(line) + ": " + e.what());
  }
}

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

BigInt parse_utility(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x < 0) schema_error(field, "utilities must be non-negative");
    return BigInt(x);
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      schema_error(field, "expected a non-negative integer or a decimal string");
    }
    return BigInt(s);
  }
  schema_error(field, "expected a non-negative integer");
}

json utility_to_json(const BigInt& u) {
  if (u <= BigInt(std::numeric_limits<std::int64_t>::max())) return json(static_cast<std::int64_t>(u));
  return json(u.str());
}

}  // namespace

Profile ElectionDocument::profile() const {
  Profile p;
  p.m = static_cast<int>(candidates.size());
  p.candidate_names = candidates;
  for (const auto& v : voters) {
    p.voters.push_back(v.utilities);
    p.voter_names.push_back(v.name);
  }
  return p;
}

VotingOrder ElectionDocument::voting_order() const {
  if (order) return VotingOrder(*order);
  return VotingOrder::identity(static_cast<int>(voters.size()));
}

ElectionDocument parse_election(std::string_view text, bool skip_validate) {
  const json root = parse_json(text);
  if (!root.is_object()) schema_error("(root)", "expected an object");
  ElectionDocument doc;

  const json& cands = require(root, "candidates", "");
  if (!cands.is_array() || cands.empty()) schema_error("candidates", "expected a non-empty array");
  for (std::size_t j = 0; j < cands.size(); ++j) {
    const std::string field = "candidates[" + std::to_string(j) + "]";
    if (!cands[j].is_string() || cands[j].get_ref<const std::string&>().empty()) {
      schema_error(field, "expected a non-empty string");
    }
    const auto& name = cands[j].get_ref<const std::string&>();
    if (name == "ABSTAIN") schema_error(field, "ABSTAIN is reserved");
    if (std::find(doc.candidates.begin(), doc.candidates.end(), name) != doc.candidates.end()) {
      schema_error(field, "duplicate candidate name '" + name + "'");
    }
    doc.candidates.push_back(name);
  }
  const std::size_t m = doc.candidates.size();

  const json& voters = require(root, "voters", "");
  if (!voters.is_array() || voters.empty()) schema_error("voters", "expected a non-empty array");
  std::map<std::string, int> by_name;
  for (std::size_t i = 0; i < voters.size(); ++i) {
    const std::string path = "voters[" + std::to_string(i) + "]";
    const json& v = voters[i];
    if (!v.is_object()) schema_error(path, "expected an object");
    VoterRecord rec;
    if (auto it = v.find("name"); it != v.end()) {
      if (!it->is_string()) schema_error(path + ".name", "expected a string");
      rec.name = it->get<std::string>();
    } else {
      rec.name = "v" + std::to_string(i + 1);
    }
    if (!by_name.emplace(rec.name, static_cast<int>(i)).second) {
      schema_error(path + ".name", "duplicate voter name '" + rec.name + "'");
    }
    const json& utils = require(v, "utilities", path);
    if (!utils.is_array()) schema_error(path + ".utilities", "expected an array");
    if (utils.size() != m) {
      schema_error(path + ".utilities", "voter '" + rec.name + "' has " +
                                            std::to_string(utils.size()) + " utilities for " +
                                            std::to_string(m) + " candidates");
    }
    for (std::size_t j = 0; j < utils.size(); ++j) {
      rec.utilities.push_back(
          parse_utility(utils[j], path + ".utilities[" + std::to_string(j) + "]"));
    }
    doc.voters.push_back(std::move(rec));
  }

  if (auto it = root.find("order"); it != root.end() && !it->is_null()) {
    if (!it->is_array()) schema_error("order", "expected an array");
    std::vector<int> order;
    std::vector<bool> seen(doc.voters.size(), false);
    for (std::size_t t = 0; t < it->size(); ++t) {
      const std::string field = "order[" + std::to_string(t) + "]";
      const json& e = (*it)[t];
      int idx = -1;
      if (e.is_string()) {
        auto found = by_name.find(e.get<std::string>());
        if (found == by_name.end()) schema_error(field, "unknown voter '" + e.get<std::string>() + "'");
        idx = found->second;
      } else if (e.is_number_integer()) {
        const auto raw = e.get<std::int64_t>();
        if (raw < 0 || raw >= static_cast<std::int64_t>(doc.voters.size())) {
          schema_error(field, "voter index out of range");
        }
        idx = static_cast<int>(raw);
      } else {
        schema_error(field, "expected a voter name or index");
      }
      if (seen[idx]) {
        schema_error(field, "order is not a permutation: voter '" + doc.voters[idx].name +
                                "' listed twice");
      }
      seen[idx] = true;
      order.push_back(idx);
    }
    if (order.size() != doc.voters.size()) {
      schema_error("order", "order is not a permutation: lists " + std::to_string(order.size()) +
                                " of " + std::to_string(doc.voters.size()) + " voters");
    }
    doc.order = std::move(order);
  }

  if (!skip_validate) {
    const Profile p = doc.profile();
    const ValidationReport report = validate_profile(p);
    if (report.violation) {
      const auto& v = *report.violation;
      throw InputError("voter '" + p.voter_name(v.voter) + "' is indifferent between " +
                       format_outcome(p, v.first) + " and " + format_outcome(p, v.second));
    }
  }
  return doc;
}

ElectionDocument election_from_profile(const Profile& p, const std::optional<VotingOrder>& order) {
  ElectionDocument doc;
  for (int j = 0; j < p.m; ++j) doc.candidates.push_back(p.candidate_name(j));
  for (int i = 0; i < p.n(); ++i) doc.voters.push_back(VoterRecord{p.voter_name(i), p.voters[i]});
  if (order) doc.order = std::vector<int>(order->voters().begin(), order->voters().end());
  return doc;
}

json election_to_json(const ElectionDocument& doc) {
  json j;
  j["candidates"] = doc.candidates;
  json voters = json::array();
  for (const auto& v : doc.voters) {
    json utils = json::array();
    for (const auto& u : v.utilities) utils.push_back(utility_to_json(u));
    voters.push_back(json{{"name", v.name}, {"utilities", std::move(utils)}});
  }
  j["voters"] = std::move(voters);
  if (doc.order) {
    json order = json::array();
    for (int idx : *doc.order) order.push_back(doc.voters[idx].name);
    j["order"] = std::move(order);
  }
  return j;
}

X3cInstance parse_x3c(std::string_view text) {
  const json root = parse_json(text);
  X3cInstance x;
  const json& ground = require(root, "ground_size", "");
  if (!ground.is_number_integer()) schema_error("ground_size", "expected an integer");
  x.ground_size = ground.get<int>();
  const json& sets = require(root, "sets", "");
  if (!sets.is_array()) schema_error("sets", "expected an array");
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const std::string field = "sets[" + std::to_string(s) + "]";
    if (!sets[s].is_array() || sets[s].size() != 3) schema_error(field, "expected 3 elements");
    std::array<int, 3> triple{};
    for (std::size_t t = 0; t < 3; ++t) {
      if (!sets[s][t].is_number_integer()) schema_error(field, "expected integer elements");
      triple[t] = sets[s][t].get<int>();
    }
    x.sets.push_back(triple);
  }
  validate_x3c(x);
  return x;
}

json x3c_to_json(const X3cInstance& x) {
  return json{{"ground_size", x.ground_size}, {"sets", x.sets}};
}

json result_to_json(const ResultDocument& doc) {
  json j;
  j["command"] = doc.command;
  j["outcome"] = doc.outcome ? json(*doc.outcome) : json(nullptr);
  json votes = json::array();
  for (const auto& v : doc.votes) {
    votes.push_back(json{{"round", v.round}, {"voter", v.voter}, {"ballot", v.ballot}});
  }
  j["votes"] = std::move(votes);
  j["ballots"] = doc.ballots ? json(*doc.ballots) : json(nullptr);
  j["details"] = doc.details;
  j["diagnostics"] = doc.diagnostics;
  return j;
}

ResultDocument result_from_json(const json& j) {
  ResultDocument doc;
  doc.command = j.at("command").get<std::string>();
  if (!j.at("outcome").is_null()) doc.outcome = j.at("outcome").get<std::vector<std::string>>();
  for (const auto& v : j.at("votes")) {
    doc.votes.push_back(VoteRecord{v.at("round").get<int>(), v.at("voter").get<std::string>(),
                                   v.at("ballot").get<std::string>()});
  }
  if (!j.at("ballots").is_null()) doc.ballots = j.at("ballots").get<std::vector<std::string>>();
  doc.details = j.at("details");
  doc.diagnostics = j.at("diagnostics");
  return doc;
}

std::vector<std::string> outcome_names(const Profile& p, Outcome o) {
  std::vector<std::string> names;
  for (int c : o.members()) names.push_back(p.candidate_name(c));
  return names;
}

std::vector<std::string> ballot_names(const Profile& p, std::span<const Ballot> ballots) {
  std::vector<std::string> names;
  for (Ballot b : ballots) names.push_back(format_ballot(p, b));
  return names;
}

BallotVector parse_ballots(const Profile& p, std::string_view comma_separated) {
  BallotVector ballots;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    std::size_t end = comma_separated.find(',', start);
    if (end == std::string_view::npos) end = comma_separated.size();
    std::string token(comma_separated.substr(start, end - start));
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token == "ABSTAIN" || token == "_") {
      ballots.push_back(Ballot::abstain());
    } else {
      int found = -1;
      for (int c = 0; c < p.m; ++c) {
        if (p.candidate_name(c) == token) found = c;
      }
      if (found < 0 && !token.empty() &&
          std::all_of(token.begin(), token.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        found = std::stoi(token);
        if (found >= p.m) found = -1;
      }
      if (found < 0) throw InputError("unknown ballot '" + token + "'");
      ballots.push_back(Ballot::vote(found));
    }
    start = end + 1;
  }
  return ballots;
}

}  // namespace plurality
