// Copyright 2026 The pairnet Authors
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

#include <algorithm>
#include <optional>
#include <string>

#include "pairnet/error.hpp"
#include "pairnet/routing.hpp"
#include "routing_internal.hpp"

namespace pairnet {
namespace {

constexpr int kNone = -1;

// Peels one pair per level: the last residual photon and its partner are
// walked to adjacent output lines, committing only the switches they touch
// plus enough Bar extras to leave a brickwork of the next size behind.
class BrickworkRouter {
 public:
  BrickworkRouter(const Network& net, const PairList& demand, OpCounter& ops)
      : net_(net),
        demand_(demand),
        ops_(ops),
        ports_(net.ports()),
        cols_(net.ports() / 2),
        grid_(static_cast<size_t>(cols_) * ports_, kNone),
        state_(net.size()),
        frontier_(net.ports()),
        owners_(net.size()) {
    for (const SwitchPoint& sw : net.switches()) {
      grid_[static_cast<size_t>(sw.col) * ports_ + sw.line] = sw.id;
    }
  }

  RoutingPlan Run() {
    for (int p = 0; p < ports_; ++p) Advance(p, 0, p);
    std::vector<int> alive(ports_);
    for (int p = 0; p < ports_; ++p) alive[p] = p;
    std::vector<bool> removed(ports_, false);
    RoutingPlan plan;
    plan.permuted.assign(ports_, kNone);

    while (alive.size() > 2) {
      const int n = static_cast<int>(alive.size());
      const int b = alive.back();
      const int a = demand_.partner(b);
      const int i = static_cast<int>(
          std::find(alive.begin(), alive.end(), a) - alive.begin());
      ops_.Add(n);
      committed_.clear();

      // Forward walk of both photons.
      int la = a;
      int lb = b;
      std::vector<int> b_touch;
      for (int c = 0; c < cols_; ++c) {
        ops_.Add();
        const int ka = Touching(c, la);
        const int kb = Touching(c, lb);
        if (ka != kNone && ka == kb) {
          if (!state_[ka]) {
            Commit(ka, SwitchState::kBar);
          } else if (*state_[ka] == SwitchState::kCross) {
            std::swap(la, lb);
          }
          continue;
        }
        if (ka != kNone) {
          if (!state_[ka]) {
            if (Line(ka) == la) {
              Commit(ka, SwitchState::kCross);
              ++la;
            } else {
              Commit(ka, SwitchState::kBar);
            }
          } else if (*state_[ka] == SwitchState::kCross) {
            la = Step(ka, la);
          }
        }
        if (kb != kNone) {
          if (!state_[kb]) {
            b_touch.push_back(kb);
          } else if (*state_[kb] == SwitchState::kCross) {
            lb = Step(kb, lb);
          }
        }
      }

      int between = 0;
      for (int x = la + 1; x < lb; ++x) between += removed[x] ? 0 : 1;
      ops_.Add(std::max(0, lb - la));

      int fa = la;
      int fb = lb;
      if (between == 0) {
        for (int k : b_touch) Commit(k, SwitchState::kBar);
      } else {
        // Walk backwards from the free line under a, lifting b one line per
        // open switch until it reaches its input line.
        int need = between;
        int q = la + 1;
        while (removed[q]) ++q;
        fb = q;
        for (int c = cols_ - 1; c >= 0; --c) {
          ops_.Add();
          const int k = Touching(c, q);
          if (k == kNone) continue;
          if (state_[k]) {
            if (*state_[k] == SwitchState::kCross) q = Step(k, q);
            continue;
          }
          if (Line(k) == q && need > 0) {
            Commit(k, SwitchState::kCross);
            ++q;
            --need;
          } else {
            Commit(k, SwitchState::kBar);
          }
        }
        if (need != 0 || q != b) {
          throw Error(ErrorCode::kInvalidInput,
                      "brickwork routing could not lift photon " +
                          std::to_string(b));
        }
      }
      removed[fa] = true;
      removed[fb] = true;
      plan.permuted[fa] = a;
      plan.permuted[fb] = b;

      int extras = (n - 2) - static_cast<int>(committed_.size());
      const int level_cols = n / 2;
      const int parity = level_cols % 2 == 0 ? 0 : 1;
      for (int l = parity; l < 2 * (n / 4) && extras > 0 && l < i; l += 2) {
        const auto& f = frontier_[alive[l]];
        if (f && !state_[f->id]) {
          Commit(f->id, SwitchState::kBar);
          --extras;
        }
      }
      Refresh(a, b);
      if (extras > 0) {
        const int start = (i - 1) % 2 != parity ? i - 1 : i - 2;
        for (int l = start; l >= 0 && extras > 0; l -= 2) {
          const auto& f = frontier_[alive[l]];
          if (f && !state_[f->id] && Line(f->id) == f->line) {
            Commit(f->id, SwitchState::kBar);
            --extras;
          }
        }
        Refresh(a, b);
      }
      if (extras != 0) {
        throw Error(ErrorCode::kInvalidInput,
                    "brickwork routing left " + std::to_string(extras) +
                        " switches unassigned at level " + std::to_string(n));
      }
      alive.erase(std::remove_if(alive.begin(), alive.end(),
                                 [&](int x) { return x == a || x == b; }),
                  alive.end());
      ops_.Add(n);
    }

    // The last pair takes whatever two lines remain.
    if (alive.size() == 2) {
      int slot = 0;
      for (int x = 0; x < ports_; ++x) {
        if (!removed[x]) plan.permuted[x] = alive[slot++];
      }
    }
    plan.states.resize(state_.size());
    for (size_t k = 0; k < state_.size(); ++k) {
      plan.states[k] = state_[k].value_or(SwitchState::kBar);
    }
    AssignBsas(plan);
    return plan;
  }

 private:
  struct Front {
    int id;
    int line;  // photon's line just before the switch
  };

  int Line(int id) const { return net_.switches()[id].line; }
  int Col(int id) const { return net_.switches()[id].col; }

  int Step(int id, int line) const {
    return Line(id) == line ? line + 1 : line - 1;
  }

  int Touching(int c, int line) const {
    const size_t row = static_cast<size_t>(c) * ports_;
    if (line < ports_ && grid_[row + line] != kNone) return grid_[row + line];
    if (line >= 1 && line - 1 < ports_) return grid_[row + line - 1];
    return kNone;
  }

  void Commit(int id, SwitchState s) {
    if (state_[id]) {
      throw Error(ErrorCode::kInvalidInput, "switch committed twice");
    }
    state_[id] = s;
    committed_.push_back(id);
  }

  // Moves photon p forward from column c on `line` to its next open switch.
  void Advance(int p, int c, int line) {
    for (; c < cols_; ++c) {
      ops_.Add();
      const int k = Touching(c, line);
      if (k == kNone) continue;
      if (!state_[k]) {
        frontier_[p] = Front{k, line};
        owners_[k].push_back(p);
        return;
      }
      if (*state_[k] == SwitchState::kCross) line = Step(k, line);
    }
    frontier_[p].reset();
  }

  void Refresh(int a, int b) {
    for (int k : committed_) {
      std::vector<int> owners = std::move(owners_[k]);
      owners_[k].clear();
      for (int p : owners) {
        if (p == a || p == b) continue;
        const auto& f = frontier_[p];
        if (!f || f->id != k) continue;
        const int next = *state_[k] == SwitchState::kBar ? f->line
                                                        : Step(k, f->line);
        Advance(p, Col(k) + 1, next);
      }
    }
  }

  const Network& net_;
  const PairList& demand_;
  OpCounter& ops_;
  int ports_;
  int cols_;
  std::vector<int> grid_;  // (col, line) -> switch id
  std::vector<std::optional<SwitchState>> state_;
  std::vector<std::optional<Front>> frontier_;
  std::vector<std::vector<int>> owners_;
  std::vector<int> committed_;  // this level
};

}  // namespace

RoutingPlan RouteBrickwork(int ports, const PairList& demand,
                           OpCounter* counter) {
  internal::CheckDemand(ports, demand);
  const Network net = BuildNetwork(DesignKind::kBrickwork, ports);
  OpCounter local;
  BrickworkRouter router(net, demand, counter != nullptr ? *counter : local);
  return router.Run();
}

}  // namespace pairnet
