// Copyright 2026 The procbench Authors.
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
#include "procbench/search_oracle.h"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace procbench {
namespace {

using physics::Action;
using physics::PlatformerState;

struct Node {
  PlatformerState state;
  std::uint32_t parent;
  Action action;
};

constexpr std::uint32_t kRoot = 0xFFFFFFFFu;

std::int32_t floor_div(std::int32_t a, std::int32_t b) {
  const std::int32_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// Dedup grains, tried in order. Traces are always real trajectories, so a
// coarser grain only costs completeness.
enum class Grain { kUntimed, kCoarse, kExact };

// Coarse grain: 1/4 tile and 1/10 tile per step. The exact grain only merges
// identical states.
std::uint64_t state_key(const PlatformerState& s, int time_bucket, bool exact) {
  const std::int32_t cell = exact ? 1 : 25;
  const std::int32_t vcell = exact ? 1 : 10;
  const auto qx = static_cast<std::uint64_t>(floor_div(s.x, cell) & 0xFFFF);
  const auto qy = static_cast<std::uint64_t>(floor_div(s.y, cell) & 0xFFF);
  const auto qvx = static_cast<std::uint64_t>(floor_div(s.vx, vcell) + 64) & 0x7F;
  const auto qvy = static_cast<std::uint64_t>(floor_div(s.vy, vcell) + 256) & 0x1FF;
  const std::uint64_t t =
      time_bucket > 0 ? static_cast<std::uint64_t>(s.step_count / time_bucket) & 0x3FF : 0;
  return qx | qy << 16 | qvx << 28 | qvy << 35 | static_cast<std::uint64_t>(s.on_ground) << 44 |
         t << 45;
}

// BFS from start until accept(state) holds after a step that did not kill the
// agent.
SearchResult bfs(const PlatformerLevel& level, const PlatformerState& start,
                 const SearchOptions& options,
                 const std::function<bool(const PlatformerState&)>& accept,
                 Grain grain = Grain::kCoarse) {
  const bool exact = grain == Grain::kExact;
  SearchResult result;
  result.final_state = start;
  const int horizon = std::min(options.horizon, physics::max_steps(level.game));
  int bucket = exact ? 1 : std::max(1, options.time_bucket);
  if (level.monsters.empty() || grain == Grain::kUntimed) bucket = 0;

  std::vector<Node> nodes;
  nodes.reserve(std::min<std::size_t>(options.max_states, 1u << 20));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(std::min<std::size_t>(options.max_states, 1u << 20));
  nodes.push_back({start, kRoot, Action::kNoop});
  seen.insert(state_key(start, bucket, exact));

  bool budget_hit = false;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const PlatformerState cur = nodes[head].state;
    if (cur.done() || cur.step_count >= horizon) continue;
    for (int a = 0; a < physics::kNumActions; ++a) {
      PlatformerState next = cur;
      const auto out = physics::step(level, next, static_cast<Action>(a));
      if (next.outcome == physics::Outcome::kDeath) continue;
      if (accept(next)) {
        std::vector<Action> trace{static_cast<Action>(a)};
        for (std::uint32_t n = static_cast<std::uint32_t>(head); nodes[n].parent != kRoot;
             n = nodes[n].parent) {
          trace.push_back(nodes[n].action);
        }
        std::reverse(trace.begin(), trace.end());
        result.verdict = SearchVerdict::kSolved;
        result.trace = std::move(trace);
        result.final_state = next;
        result.states = nodes.size();
        (void)out;
        return result;
      }
      if (next.done()) continue;
      if (!seen.insert(state_key(next, bucket, exact)).second) continue;
      if (nodes.size() >= options.max_states) {
        budget_hit = true;
        continue;
      }
      nodes.push_back({next, static_cast<std::uint32_t>(head), static_cast<Action>(a)});
    }
  }
  result.states = nodes.size();
  result.verdict = budget_hit ? SearchVerdict::kInconclusive : SearchVerdict::kUnsolvable;
  return result;
}

// Levels without monsters have no time dependence and use the coarse grain
// only. Unsolvable means every grain exhausted its space within budget.
SearchResult tiered_bfs(const PlatformerLevel& level, const PlatformerState& start,
                        const SearchOptions& options,
                        const std::function<bool(const PlatformerState&)>& accept) {
  if (level.monsters.empty()) return bfs(level, start, options, accept, Grain::kCoarse);
  SearchResult r;
  std::size_t states = 0;
  bool budget_hit = false;
  for (const Grain grain : {Grain::kUntimed, Grain::kCoarse, Grain::kExact}) {
    r = bfs(level, start, options, accept, grain);
    states += r.states;
    if (r.solved()) break;
    budget_hit |= r.verdict == SearchVerdict::kInconclusive;
  }
  r.states = states;
  if (!r.solved() && budget_hit) r.verdict = SearchVerdict::kInconclusive;
  return r;
}

// One of a few fixed escape sequences keeps the agent alive for
// kSurvivalWindow more steps, so a leg never ends in a state a monster is
// about to hit.
constexpr int kSurvivalWindow = 24;
constexpr int kMaxBacktracks = 16;

bool can_survive(const PlatformerLevel& level, const PlatformerState& start) {
  if (level.monsters.empty()) return true;
  for (int first = 0; first < physics::kNumActions; ++first) {
    for (const Action hold : {Action::kNoop, Action::kLeft, Action::kRight}) {
      PlatformerState s = start;
      for (int t = 0; t < kSurvivalWindow && s.outcome == physics::Outcome::kRunning; ++t) {
        physics::step(level, s, t == 0 ? static_cast<Action>(first) : hold);
      }
      if (s.outcome != physics::Outcome::kDeath) return true;
    }
  }
  return false;
}

}  // namespace

SearchResult physics_search_oracle(const PlatformerLevel& level,
                                   const SearchOptions& options) {
  const PlatformerState start = physics::reset(level);
  if (level.game == Game::kCoinRun) {
    SearchResult r = tiered_bfs(level, start, options, [](const PlatformerState& s) {
      return s.outcome == physics::Outcome::kCoinAll;
    });
    if (r.solved()) r.total_return = replay_trace(level, r.trace).total_return;
    return r;
  }

  // Platforms: chain of legs, each ending at the next collected coin. When a
  // leg fails the previous one is redone with the coin it took banned.
  struct Frame {
    PlatformerState state;
    std::size_t trace_len;
    std::uint64_t banned;
  };
  SearchResult total;
  total.final_state = start;
  std::vector<Frame> frames{{start, 0, 0}};
  int backtracks = 0;
  bool budget_hit = false;
  while (!frames.back().state.done()) {
    const Frame& f = frames.back();
    const std::uint64_t before = f.state.coins_remaining;
    const std::uint64_t banned = f.banned;
    SearchResult leg = tiered_bfs(level, f.state, options, [&](const PlatformerState& s) {
      const std::uint64_t taken = before & ~s.coins_remaining;
      return taken != 0 && (taken & banned) == 0 && (s.done() || can_survive(level, s));
    });
    total.states += leg.states;
    if (leg.solved()) {
      total.trace.resize(f.trace_len);
      total.trace.insert(total.trace.end(), leg.trace.begin(), leg.trace.end());
      frames.push_back({leg.final_state, total.trace.size(), 0});
      continue;
    }
    budget_hit |= leg.verdict == SearchVerdict::kInconclusive;
    if (frames.size() == 1 || ++backtracks > kMaxBacktracks) {
      total.verdict = (frames.size() == 1 && !budget_hit && backtracks == 0)
                          ? SearchVerdict::kUnsolvable
                          : SearchVerdict::kInconclusive;
      total.final_state = f.state;
      return total;
    }
    const std::uint64_t taken = before ^ frames[frames.size() - 2].state.coins_remaining;
    frames.pop_back();
    frames.back().banned |= taken;
  }
  total.trace.resize(frames.back().trace_len);
  total.final_state = frames.back().state;
  total.verdict = total.final_state.outcome == physics::Outcome::kCoinAll
                      ? SearchVerdict::kSolved
                      : SearchVerdict::kInconclusive;
  total.total_return = replay_trace(level, total.trace).total_return;
  return total;
}

SearchResult search_coin(const PlatformerLevel& level, std::size_t coin_index,
                         const SearchOptions& options) {
  const std::uint64_t bit = 1ULL << coin_index;
  SearchResult r = tiered_bfs(level, physics::reset(level), options,
                              [bit](const PlatformerState& s) { return (s.coins_remaining & bit) == 0; });
  if (r.solved()) r.total_return = replay_trace(level, r.trace).total_return;
  return r;
}

ReplayResult replay_trace(const PlatformerLevel& level,
                          const std::vector<physics::Action>& trace) {
  ReplayResult r;
  r.final_state = physics::reset(level);
  for (const Action a : trace) {
    if (r.final_state.done()) {
      r.finished_early = true;
      break;
    }
    r.total_return += physics::step(level, r.final_state, a).reward;
  }
  return r;
}

}  // namespace procbench
