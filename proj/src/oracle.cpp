/*
   Copyright 2026 The smallball Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "smallball/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace smallball::oracle {

namespace {

std::vector<double> cumulative_masses(const Measure& m) {
  std::vector<double> cum;
  double acc = 0.0;
  for (const auto& s : m.segments()) {
    cum.push_back(acc += s.mass());
  }
  for (const auto& iv : m.intervals()) {
    cum.push_back(acc += iv.mass());
  }
  return cum;
}

Point point_on(const Measure& m, std::size_t k, double t) {
  if (m.dim() == 2) {
    const Segment& s = m.segments()[k];
    return Point(s.a().x() + t * (s.b().x() - s.a().x()), s.a().y() + t * (s.b().y() - s.a().y()));
  }
  const Interval& iv = m.intervals()[k];
  return Point(iv.lo() + t * (iv.hi() - iv.lo()));
}

std::uint64_t count_hits(const Measure& m, const Ball& b, const std::vector<double>& cum,
                         const Philox4x32& gen, std::uint64_t begin, std::uint64_t end) {
  const double total = cum.back();
  std::uint64_t hits = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    const auto [u_component, u_position] = gen.uniform_pair(i);
    const auto it = std::upper_bound(cum.begin(), cum.end(), u_component * total);
    const auto k = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cum.begin(), static_cast<std::ptrdiff_t>(cum.size()) - 1));
    if (b.contains(point_on(m, k, u_position))) {
      ++hits;
    }
  }
  return hits;
}

}  // namespace

McEstimate mc_ball_mass(const Measure& m, const Ball& b, const McConfig& cfg, unsigned workers) {
  if (m.dim() != b.dim()) {
    throw DimensionMismatch("ball and measure have different dimensions");
  }
  if (cfg.n_samples < 1000) {
    throw std::invalid_argument("Monte Carlo needs at least 1e3 samples");
  }
  const auto cum = cumulative_masses(m);
  if (cum.empty() || !(cum.back() > 0.0)) {
    throw std::invalid_argument("Monte Carlo needs a measure with positive total mass");
  }
  const Philox4x32 gen(cfg.seed);
  const std::uint64_t n = cfg.n_samples;
  workers = std::max(1u, workers);
  std::vector<std::uint64_t> hits(workers, 0);
  if (workers == 1) {
    hits[0] = count_hits(m, b, cum, gen, 0, n);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = n * w / workers;
      const std::uint64_t end = n * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { hits[w] = count_hits(m, b, cum, gen, begin, end); });
    }
  }
  std::uint64_t total_hits = 0;
  for (const auto h : hits) {
    total_hits += h;
  }
  const double total = cum.back();
  const double p = static_cast<double>(total_hits) / static_cast<double>(n);
  return {total * p, total * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

double quadrature_ball_mass(const Measure& m, const Ball& b, std::uint64_t subdivisions) {
  if (m.dim() != b.dim()) {
    throw DimensionMismatch("ball and measure have different dimensions");
  }
  if (subdivisions < 1) {
    throw std::invalid_argument("quadrature needs at least one subdivision");
  }
  const auto n = static_cast<double>(subdivisions);
  double mass = 0.0;
  const std::size_t components = m.size();
  for (std::size_t k = 0; k < components; ++k) {
    const double piece =
        (m.dim() == 2 ? m.segments()[k].mass() : m.intervals()[k].mass()) / n;
    std::uint64_t inside = 0;
    for (std::uint64_t i = 0; i < subdivisions; ++i) {
      if (b.contains(point_on(m, k, (static_cast<double>(i) + 0.5) / n))) {
        ++inside;
      }
    }
    mass += piece * static_cast<double>(inside);
  }
  return mass;
}

double quadrature_error_bound(const Measure& m, std::uint64_t subdivisions) {
  return 4.0 * total_mass(m) / static_cast<double>(subdivisions);
}

Measure random_segment_measure(UniformStream& rng, int max_segments) {
  const int k = 1 + static_cast<int>(rng.next() * max_segments);
  std::vector<Segment> segs;
  while (static_cast<int>(segs.size()) < k) {
    const Point a(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Point b(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double density = rng.uniform(0.1, 2.0);
    if (distance(a, b, Norm::L2) > 1e-3) {
      segs.emplace_back(a, b, density);
    }
  }
  return Measure::planar(std::move(segs), "random-segments");
}

Measure random_step_measure(UniformStream& rng, int max_pieces) {
  const int k = 1 + static_cast<int>(rng.next() * max_pieces);
  std::vector<double> cuts;
  for (int i = 0; i < 2 * k; ++i) {
    cuts.push_back(rng.uniform(-2, 2));
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> pieces;
  for (int i = 0; i < k; ++i) {
    const double lo = cuts[2 * static_cast<std::size_t>(i)];
    const double hi = cuts[2 * static_cast<std::size_t>(i) + 1];
    if (hi > lo) {
      pieces.emplace_back(lo, hi, rng.uniform(0.1, 3.0));
    }
  }
  if (pieces.empty()) {
    pieces.emplace_back(-1.0, 1.0, 1.0);
  }
  return Measure::linear(std::move(pieces), "random-steps");
}

std::vector<OracleCase> random_oracle_cases(std::uint64_t seed, int count) {
  UniformStream rng(seed);
  std::vector<OracleCase> cases;
  for (int i = 0; i < count; ++i) {
    const std::string id = "case-" + std::to_string(i);
    const double radius = rng.uniform(0.05, 1.2);
    if (i % 4 == 3) {
      Measure m = random_step_measure(rng);
      const Point c(rng.uniform(-2, 2));
      cases.push_back({id, std::move(m), Ball(c, radius)});
      continue;
    }
    Measure m = random_segment_measure(rng);
    const Point c(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2));
    const Norm norm = i % 4 == 0 ? Norm::L1 : (i % 4 == 1 ? Norm::L2 : Norm::Linf);
    cases.push_back({id, std::move(m), Ball(c, radius, norm)});
  }
  return cases;
}

}  // namespace smallball::oracle
