#include "hanabi_tom/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hanabi_tom/belief.h"
#include "hanabi_tom/json_io.h"
#include "hanabi_tom/logging.h"

namespace hanabi_tom {

void EpisodeConfig::Validate() const {
  if (num_players < 2 || num_players > 5) {
    throw std::invalid_argument("num_players must be in 2..5");
  }
  if (policies.size() != 1 &&
      policies.size() != static_cast<size_t>(num_players)) {
    throw std::invalid_argument("need one policy, or one per seat");
  }
  if (belief_level != 0 && belief_level != 1) {
    throw std::invalid_argument("belief level must be 0 or 1");
  }
  if (mc_samples < 1) {
    throw std::invalid_argument("mc_samples must be >= 1");
  }
  reward.Validate();
}

namespace {

BeliefMatrix NestedBelief(const Observation& obs, int target,
                          BeliefMethod method, int mc_samples, Rng& rng) {
  return method == BeliefMethod::kMap
             ? NestedBeliefMap(obs, target)
             : NestedBeliefMc(obs, target, mc_samples, rng);
}

LastActionInfo MakeLastActionInfo(int actor, const Action& action,
                                  const std::vector<GameEvent>& events) {
  LastActionInfo info;
  info.actor = actor;
  info.action = action;
  for (const GameEvent& ev : events) {
    switch (ev.type) {
      case GameEvent::Type::kHintGiven:
        info.touched_slots = ev.touched_slots;
        break;
      case GameEvent::Type::kCardPlayed:
        info.moved_card = ev.card;
        info.successful_play = ev.successful_play;
        break;
      case GameEvent::Type::kCardDiscarded:
        info.moved_card = ev.card;
        break;
      default:
        break;
    }
  }
  return info;
}

}  // namespace

Trajectory RunEpisode(const EpisodeConfig& cfg) {
  cfg.Validate();

  std::vector<std::unique_ptr<Policy>> policies;
  std::vector<Rng> policy_rngs;
  std::vector<Rng> belief_rngs;
  for (int seat = 0; seat < cfg.num_players; ++seat) {
    const PolicySpec& spec =
        cfg.policies.size() == 1 ? cfg.policies[0] : cfg.policies[seat];
    policies.push_back(MakePolicy(spec));
    policy_rngs.emplace_back(MixSeed(cfg.seed, 1000 + seat));
    belief_rngs.emplace_back(MixSeed(cfg.seed, 2000 + seat));
  }

  Trajectory traj;
  traj.num_players = cfg.num_players;
  traj.seed = cfg.seed;
  traj.belief_level = cfg.belief_level;
  traj.method = cfg.method;
  traj.mc_samples = cfg.mc_samples;
  traj.beta = cfg.reward.beta;
  traj.wasserstein_p = cfg.reward.p;
  traj.policy = cfg.policies[0].ToString();
  traj.gamma = cfg.gamma;

  GameState state = NewGame(cfg.num_players, cfg.seed, cfg.game);
  std::optional<LastActionInfo> last_action;
  int turn = 0;
  double discount = 1.0;

  while (!ScoreAndTerminal(state).terminal) {
    int actor = state.current_player;
    Observation obs = Observe(state, actor);
    std::vector<Action> legal = LegalActions(state);

    EncodeOptions enc_opts;
    enc_opts.level = cfg.belief_level;
    enc_opts.method = cfg.method;
    enc_opts.mc_samples = cfg.mc_samples;
    enc_opts.rng = &belief_rngs[actor];
    enc_opts.last_action = last_action;
    EncodedObservation encoded = Encode(obs, enc_opts);

    TurnRecord record;
    record.turn = turn;
    record.actor = actor;
    record.state_hash = StateHash(state);

    for (const Observation::VisibleHand& hand : obs.others_hands) {
      record.beliefs_before[hand.player] = NestedBelief(
          obs, hand.player, cfg.method, cfg.mc_samples, belief_rngs[actor]);
      std::vector<Card> cards;
      for (const HandSlot& slot : hand.slots) cards.push_back(slot.card);
      record.true_hands[hand.player] = std::move(cards);
    }
    std::vector<Card> map_before = MapHand(obs);

    PolicyContext ctx{obs,        encoded,        legal,
                      cfg.reward, cfg.method,     cfg.mc_samples,
                      policy_rngs[actor]};
    record.action = policies[actor]->Act(ctx);

    ApplyResult applied = ApplyAction(state, record.action);
    for (const GameEvent& ev : applied.events) {
      if (ev.type == GameEvent::Type::kHintGiven) {
        record.hint_touched_slots = ev.touched_slots;
      }
    }

    Observation obs_after = Observe(applied.state, actor);
    for (const Observation::VisibleHand& hand : obs_after.others_hands) {
      record.beliefs_after[hand.player] =
          NestedBelief(obs_after, hand.player, cfg.method, cfg.mc_samples,
                       belief_rngs[actor]);
    }
    record.map_hand_changed = MapHand(obs_after) != map_before;

    record.intrinsic = IntrinsicReward(record.beliefs_before,
                                       record.beliefs_after,
                                       record.true_hands, cfg.reward);
    record.extrinsic = ScoreAndTerminal(applied.state).score -
                       ScoreAndTerminal(state).score;
    record.combined =
        CombinedReward(record.extrinsic, record.intrinsic, cfg.reward);
    record.score_after = ScoreAndTerminal(applied.state).score;

    traj.discounted_return += discount * record.combined;
    discount *= cfg.gamma;

    last_action = MakeLastActionInfo(actor, record.action, applied.events);
    traj.turns.push_back(std::move(record));
    state = std::move(applied.state);
    ++turn;
  }

  ScoreInfo info = ScoreAndTerminal(state);
  traj.final_score = info.score;
  traj.cause = info.cause;
  traj.final_hash = StateHash(state);
  return traj;
}

EpisodeStats ComputeStats(std::vector<int> scores) {
  EpisodeStats stats;
  stats.scores = std::move(scores);
  size_t n = stats.scores.size();
  if (n == 0) return stats;

  std::vector<int> sorted = stats.scores;
  std::sort(sorted.begin(), sorted.end());
  stats.median = n % 2 == 1 ? sorted[n / 2]
                            : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  double sum = 0;
  for (int s : stats.scores) sum += s;
  stats.mean = sum / static_cast<double>(n);

  if (n > 1) {
    double ss = 0;
    for (int s : stats.scores) {
      double d = s - stats.mean;
      ss += d * d;
    }
    stats.sem = std::sqrt(ss / static_cast<double>(n - 1)) /
                std::sqrt(static_cast<double>(n));
  }
  return stats;
}

BatchResult RunBatch(const EpisodeConfig& base, const BatchOptions& options) {
  base.Validate();
  if (options.episodes < 1) {
    throw std::invalid_argument("episode count must be >= 1");
  }
  int workers = std::max(1, options.parallelism);

  BatchResult result;
  std::vector<int> scores(options.episodes, 0);
  if (options.keep_trajectories) {
    result.trajectories.resize(options.episodes);
  }

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mu;

  auto work = [&] {
    for (;;) {
      int e = next.fetch_add(1);
      if (e >= options.episodes || failed.load()) return;
      try {
        EpisodeConfig cfg = base;
        cfg.seed = MixSeed(base.seed, static_cast<uint64_t>(e));
        Trajectory traj = RunEpisode(cfg);
        scores[e] = traj.final_score;
        if (options.keep_trajectories) {
          result.trajectories[e] = std::move(traj);
        }
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(error_mu);
        failed.store(true);
        if (error_message.empty()) error_message = ex.what();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (std::thread& t : threads) t.join();
  }
  if (failed.load()) {
    throw std::runtime_error("episode failed: " + error_message);
  }

  result.stats = ComputeStats(std::move(scores));
  return result;
}

std::string StatsCsvHeader() {
  return "players,policy,beta,level,N,median,mean,sem\n";
}

std::string StatsCsvLine(const StatsCsvRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%s,%.6g,%d,%d,%.6f,%.6f,%.6f\n",
                row.players, row.policy.c_str(), row.beta, row.level, row.n,
                row.median, row.mean, row.sem);
  return buf;
}

namespace {

std::string HashToHex(uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

uint64_t HashFromHex(const std::string& s) {
  return std::stoull(s, nullptr, 16);
}

Json CardsToJson(const std::vector<Card>& cards) {
  Json j = Json::array();
  for (const Card& c : cards) j.push_back(c);
  return j;
}

}  // namespace

std::string TrajectoryToJsonl(const Trajectory& t, int episode_index) {
  std::ostringstream out;
  Json meta{{"type", "meta"},
            {"episode", episode_index},
            {"num_players", t.num_players},
            {"seed", t.seed},
            {"belief_level", t.belief_level},
            {"method", ToString(t.method)},
            {"mc_samples", t.mc_samples},
            {"beta", t.beta},
            {"p", t.wasserstein_p},
            {"policy", t.policy},
            {"gamma", t.gamma}};
  out << CanonicalDump(meta) << "\n";

  for (const TurnRecord& turn : t.turns) {
    Json true_hands = Json::object();
    Json before = Json::object();
    Json after = Json::object();
    for (const auto& [player, hand] : turn.true_hands) {
      true_hands[std::to_string(player)] = CardsToJson(hand);
    }
    for (const auto& [player, m] : turn.beliefs_before) {
      before[std::to_string(player)] = BeliefMatrixToJson(m);
    }
    for (const auto& [player, m] : turn.beliefs_after) {
      after[std::to_string(player)] = BeliefMatrixToJson(m);
    }
    Json j{{"type", "turn"},
           {"episode", episode_index},
           {"turn", turn.turn},
           {"actor", turn.actor},
           {"state_hash", HashToHex(turn.state_hash)},
           {"action", turn.action},
           {"extrinsic", turn.extrinsic},
           {"intrinsic", turn.intrinsic},
           {"combined", turn.combined},
           {"map_hand_changed", turn.map_hand_changed},
           {"hint_touched_slots", turn.hint_touched_slots},
           {"true_hands", true_hands},
           {"beliefs_before", before},
           {"beliefs_after", after},
           {"score_after", turn.score_after}};
    out << CanonicalDump(j) << "\n";
  }

  Json footer{{"type", "result"},
              {"episode", episode_index},
              {"final_score", t.final_score},
              {"cause", ToString(t.cause)},
              {"turns", t.turns.size()},
              {"final_hash", HashToHex(t.final_hash)},
              {"discounted_return", t.discounted_return}};
  out << CanonicalDump(footer) << "\n";
  return out.str();
}

std::vector<Trajectory> ReadTrajectoriesJsonl(std::istream& in) {
  std::vector<Trajectory> result;
  Trajectory current;
  bool open = false;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument("trajectory line " +
                                  std::to_string(line_number) +
                                  " is not valid JSON: " + e.what());
    }
    std::string type = j.at("type").get<std::string>();
    if (type == "meta") {
      if (open) throw std::invalid_argument("meta line inside an episode");
      current = Trajectory{};
      current.num_players = j.at("num_players").get<int>();
      current.seed = j.at("seed").get<uint64_t>();
      current.belief_level = j.at("belief_level").get<int>();
      current.method =
          BeliefMethodFromString(j.at("method").get<std::string>());
      current.mc_samples = j.at("mc_samples").get<int>();
      current.beta = j.at("beta").get<double>();
      current.wasserstein_p = j.at("p").get<double>();
      current.policy = j.at("policy").get<std::string>();
      current.gamma = j.at("gamma").get<double>();
      open = true;
    } else if (type == "turn") {
      if (!open) throw std::invalid_argument("turn line before meta");
      TurnRecord turn;
      turn.turn = j.at("turn").get<int>();
      turn.actor = j.at("actor").get<int>();
      turn.state_hash = HashFromHex(j.at("state_hash").get<std::string>());
      j.at("action").get_to(turn.action);
      turn.extrinsic = j.at("extrinsic").get<double>();
      turn.intrinsic = j.at("intrinsic").get<double>();
      turn.combined = j.at("combined").get<double>();
      turn.map_hand_changed = j.at("map_hand_changed").get<bool>();
      j.at("hint_touched_slots").get_to(turn.hint_touched_slots);
      for (auto it = j.at("true_hands").begin(); it != j.at("true_hands").end();
           ++it) {
        std::vector<Card> cards;
        it.value().get_to(cards);
        turn.true_hands[std::stoi(it.key())] = std::move(cards);
      }
      for (auto it = j.at("beliefs_before").begin();
           it != j.at("beliefs_before").end(); ++it) {
        turn.beliefs_before[std::stoi(it.key())] =
            BeliefMatrixFromJson(it.value());
      }
      for (auto it = j.at("beliefs_after").begin();
           it != j.at("beliefs_after").end(); ++it) {
        turn.beliefs_after[std::stoi(it.key())] =
            BeliefMatrixFromJson(it.value());
      }
      turn.score_after = j.at("score_after").get<int>();
      current.turns.push_back(std::move(turn));
    } else if (type == "result") {
      if (!open) throw std::invalid_argument("result line before meta");
      current.final_score = j.at("final_score").get<int>();
      current.cause = TerminalCauseFromString(j.at("cause").get<std::string>());
      current.final_hash = HashFromHex(j.at("final_hash").get<std::string>());
      current.discounted_return = j.at("discounted_return").get<double>();
      result.push_back(std::move(current));
      open = false;
    } else {
      throw std::invalid_argument("unknown trajectory line type: " + type);
    }
  }
  if (open) throw std::invalid_argument("trajectory ends without a result line");
  return result;
}

double RecomputeIntrinsic(const TurnRecord& turn, const RewardConfig& reward) {
  return IntrinsicReward(turn.beliefs_before, turn.beliefs_after,
                         turn.true_hands, reward);
}

}  // namespace hanabi_tom
