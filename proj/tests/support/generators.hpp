// Copyright 2026 The reqviz Authors
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

// Seeded random instances for property tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reqviz/goal_model.hpp"
#include "reqviz/refinement.hpp"
#include "reqviz/vis_model.hpp"

namespace reqviz::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  template <typename E>
  E pick() {
    const auto all = all_values<E>();
    return all[below(all.size())];
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  template <typename E>
  std::vector<E> distinct_subset(std::size_t min_size) {
    std::vector<E> all(all_values<E>().begin(), all_values<E>().end());
    std::shuffle(all.begin(), all.end(), rng_);
    const std::size_t n = min_size + below(all.size() - min_size + 1);
    all.resize(n);
    return all;
  }

  // Names exercise quoting: spaces, quotes, backslashes, tabs, non-ASCII.
  std::string name(const char* stem) {
    static const std::vector<std::string> flavours = {
        "", " plan", " \"quoted\"", " back\\slash", " tab\there", " año", " a/b", " 10%"};
    return std::string(stem) + " " + std::to_string(counter_++) + pick(flavours);
  }

  std::string column() { return "col_" + std::to_string(counter_++); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uint64_t counter_ = 0;
};

inline DatasourceResource random_source(Gen& g) {
  DatasourceResource src;
  src.uri = "data/" + g.column() + ".csv";
  const std::size_t ncat = g.below(3);
  const std::size_t nmeas = (ncat == 0 ? 1 : 0) + g.below(3);
  for (std::size_t i = 0; i < ncat; ++i) src.categories.push_back(g.column());
  for (std::size_t i = 0; i < nmeas; ++i) src.measures.push_back(g.column());
  switch (g.below(4)) {
    case 0: src.shape = TreeShape{g.column(), g.column()}; break;
    case 1: src.shape = GraphShape{g.column(), g.column()}; break;
    default: src.shape = FlatShape{};
  }
  if (g.coin(0.3)) {
    const auto attrs = src.attributes();
    src.type_overrides[g.pick(attrs)] = g.pick<ScaleType>();
  }
  return src;
}

inline GoalModel random_goal_model(Gen& g) {
  GoalModel m;
  m.actor = {g.name("Actor"), g.pick<ActorKind>()};
  m.process = {g.name("Process")};
  const std::size_t nstrategic = 1 + g.below(2);
  for (std::size_t s = 0; s < nstrategic; ++s) {
    StrategicGoal sg{g.name("Strategic"), {}};
    const std::size_t nanalysis = 1 + g.below(2);
    for (std::size_t a = 0; a < nanalysis; ++a) {
      AnalysisType at{g.pick<AnalysisKind>(), {}};
      const std::size_t ndecision = 1 + g.below(2);
      for (std::size_t d = 0; d < ndecision; ++d) {
        DecisionGoal dg{g.name("Decision"), {}};
        const std::size_t ninfo = 1 + g.below(2);
        for (std::size_t i = 0; i < ninfo; ++i) {
          VisualizationRequirement v;
          v.name = g.name("Visualization");
          v.goals = g.distinct_subset<VisualizationGoal>(1);
          v.interactions = g.distinct_subset<InteractionType>(1);
          const std::size_t nsrc = 1 + (g.coin(0.2) ? 1 : 0);
          for (std::size_t k = 0; k < nsrc; ++k) v.sources.push_back(random_source(g));
          dg.information_goals.push_back({g.name("Information"), std::move(v)});
        }
        at.decision_goals.push_back(std::move(dg));
      }
      sg.analyses.push_back(std::move(at));
    }
    m.strategic_goals.push_back(std::move(sg));
  }
  return m;
}

inline std::string random_hex(Gen& g) {
  static constexpr char digits[] = "0123456789abcdefABCDEF";
  std::string out = "#";
  for (int i = 0; i < 6; ++i) out.push_back(digits[g.below(22)]);
  return out;
}

inline ColorRange random_color_range(Gen& g) {
  if (g.coin()) {
    const auto ids = palette_ids();
    return ColorRange{NamedPalette{std::string(ids[g.below(ids.size())])}};
  }
  CustomPalette custom;
  const std::size_t n = 1 + g.below(6);
  for (std::size_t i = 0; i < n; ++i) custom.colors.push_back(random_hex(g));
  return ColorRange{custom};
}

inline Legend random_legend(Gen& g) {
  Legend l;
  l.title = g.name("Legend");
  l.type = g.pick<LegendType>();
  l.position = g.pick<LegendPosition>();
  l.font_family = g.coin() ? "sans-serif" : "Georgia, serif";
  // Values with short and long decimal expansions.
  static const std::vector<double> sizes = {8, 10.5, 12, 14.25, 0.1, 1e-3, 17.000000000000004};
  l.text_size = g.pick(sizes);
  return l;
}

inline std::optional<DashboardPosition> random_position(Gen& g) {
  if (g.coin()) return std::nullopt;
  return DashboardPosition{static_cast<std::uint32_t>(g.below(10)),
                           static_cast<std::uint32_t>(g.below(10)),
                           static_cast<std::uint32_t>(1 + g.below(12)),
                           static_cast<std::uint32_t>(1 + g.below(6))};
}

/// A model satisfying check_model_invariants.
inline VisualizationModel random_vis_model(Gen& g) {
  VisualizationModel m;
  m.title = g.name("Chart");
  m.interactions = g.distinct_subset<InteractionType>(0);
  m.color_range = random_color_range(g);
  m.dashboard_position = random_position(g);
  m.graphic_type = g.pick<GraphicType>();

  if (is_graph_family(m.graphic_type)) {
    GraphVisualization body;
    body.layout = m.graphic_type == GraphicType::Treemap ? GraphLayout::Tree
                  : g.coin()                             ? GraphLayout::Tree
                                                         : GraphLayout::Graph;
    body.nodes = {g.column(), g.column()};
    body.edges = {g.column(), g.column()};
    m.body = body;
    m.orientation = Orientation::Any;
    if (g.coin(0.3)) m.legend = random_legend(g);
    return m;
  }

  m.orientation = has_orientation(m.graphic_type)
                      ? (g.coin() ? Orientation::Horizontal : Orientation::Vertical)
                      : Orientation::Any;
  std::vector<Channel> channels(all_values<Channel>().begin(), all_values<Channel>().end());
  std::shuffle(channels.begin(), channels.end(), g.engine());
  std::size_t count = g.below(channels.size() + 1);
  if (requires_xy(m.graphic_type)) {
    std::erase(channels, Channel::X);
    std::erase(channels, Channel::Y);
    channels.insert(channels.begin(), {Channel::X, Channel::Y});
    count = std::max<std::size_t>(count, 2);
  }
  AxisVisualization body;
  for (std::size_t i = 0; i < count; ++i) {
    Axis a;
    a.name = g.name("Axis");
    a.channel = channels[i];
    if (!g.coin(0.1)) {
      const AttributeRole role = g.pick<AttributeRole>();
      a.attribute = Attribute{g.column(), g.pick<ScaleType>(), role};
    }
    if (g.coin(0.3)) {
      const double lo = g.real(-1e6, 1e6);
      a.min_value = std::round(lo * 100) / 100;
      a.max_value = *a.min_value + 0.5 + g.below(1000);
    } else if (g.coin(0.2)) {
      a.min_value = g.real(-10, 10);
    }
    body.axes.push_back(std::move(a));
  }
  if (!body.axes.empty()) body.axes[g.below(body.axes.size())].order_role = true;
  m.body = std::move(body);
  if (g.coin(0.6)) m.legend = random_legend(g);
  return m;
}

/// Any op, valid or not, drawing names from `model` most of the time.
inline RefinementOp random_op(Gen& g, const VisualizationModel& model) {
  std::vector<std::string> attributes = {"NoSuchColumn"};
  if (const auto* axes = model.axes()) {
    for (const auto& a : axes->axes) {
      if (a.attribute) attributes.push_back(a.attribute->name);
    }
  }
  switch (g.below(8)) {
    case 0: return SetChannel{g.pick(attributes), g.pick<Channel>(), g.coin(0.8)};
    case 1: return SetOrder{g.pick(attributes)};
    case 2: return SetOrientation{g.pick<Orientation>()};
    case 3: return SetLegend{g.coin(0.8) ? std::optional<Legend>(random_legend(g)) : std::nullopt};
    case 4: {
      if (g.coin(0.1)) return SetColorRange{ColorRange{NamedPalette{"no-such-palette"}}};
      if (g.coin(0.1)) return SetColorRange{ColorRange{CustomPalette{{"red"}}}};
      return SetColorRange{random_color_range(g)};
    }
    case 5: {
      SetAxisBounds op{g.pick<Channel>(), std::nullopt, std::nullopt};
      if (g.coin(0.7)) op.min_value = g.real(-100, 100);
      if (g.coin(0.7)) op.max_value = g.real(-100, 100);
      return op;
    }
    case 6: return SetTitle{g.coin(0.9) ? g.name("Title") : std::string()};
    default: {
      auto pos = random_position(g);
      if (pos && g.coin(0.1)) pos->width = 0;
      return SetDashboardPosition{pos};
    }
  }
}

}  // namespace reqviz::testing
