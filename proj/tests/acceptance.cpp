// Copyright 2026 The dialcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "dialcount/cipca.hpp"
#include "dialcount/countability.hpp"
#include "dialcount/counting.hpp"
#include "dialcount/enumerate.hpp"
#include "dialcount/granules.hpp"
#include "dialcount/measures.hpp"
#include "dialcount/paper_example.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dialcount;
using namespace dialcount::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

// Collects sub-check outcomes for one criterion.
class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report() const {
    std::cout << (ok_ ? "PASS" : "FAIL") << "  criterion " << number_ << ": " << title_;
    std::vector<std::string> parts = notes_;
    for (const auto& f : failures_) parts.push_back("failed: " + f);
    if (!parts.empty()) {
      std::cout << " [";
      for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "; " : "") << parts[i];
      std::cout << "]";
    }
    std::cout << std::endl;
    return ok_;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string values_of(const std::vector<CountToken>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.is_defined() ? std::to_string(t.alpha()) : "*");
  return join(out);
}

bool criterion_golden() {
  Criterion c(1, "worked-example golden rows, S|Q, POS and induced counts");
  const auto start = Clock::now();
  const auto r = paper_example::r_space();
  const auto q = paper_example::q_space();
  const Universe& u = r.universe();
  const Order order = paper_example::presented_order();

  const auto hppc_row = values_of(hppc(r, order).tokens);
  c.check(hppc_row == "1,2,*,*,3,*,4,5,*,*,*,*", "HPPC row " + hppc_row);
  const auto q_row = join(hpc(q, order).rendered());
  c.check(q_row == "1_1,2_1,3_1,1_2,2_2,1_3,2_3,3_3,1_4,1_5,2_5,1_6", "Q-HPC row " + q_row);

  std::set<std::set<std::string>> expected_blocks{{"a", "b"}, {"c"}, {"e", "f"}, {"i", "k"},
                                                  {"l", "m", "n"}, {"g"}, {"h"}};
  std::set<std::set<std::string>> got_blocks;
  const Granulation q_classes = classes(q);
  for (const auto& b : q_classes.blocks()) {
    const auto labels = u.labels_of(b);
    got_blocks.insert({labels.begin(), labels.end()});
  }
  c.check(got_blocks == expected_blocks, "S|Q");

  const ElementSet pos = positive_region(q, r);
  const auto pos_labels = u.labels_of(pos);
  const std::set<std::string> pos_set(pos_labels.begin(), pos_labels.end());
  c.check(pos_set == std::set<std::string>{"e", "f", "l", "m", "n"},
          "POS_R(Q) = {e,f,l,m,n} expected, computed {" + join(pos_labels) + "}");

  const auto induced_row = join(render(induced(hpc(q, order), pos)));
  c.check(induced_row == "1_1,2_3,1_4,1_5,1_6",
          "induced Q-HPC = 1_1,2_3,1_4,1_5,1_6 expected, computed " + induced_row);

  const double elapsed = seconds_since(start);
  c.check(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream t;
  t << "runtime " << elapsed << " s";
  c.note(t.str());
  return c.report();
}

bool criterion_erratum() {
  Criterion c(2, "verify reports the R-IPC and R-HPC divergences and nowhere else");
  const auto report = paper_example::verify();
  std::map<std::string, std::vector<std::size_t>> divergences;
  for (const auto& check : report.checks) divergences[check.name] = check.divergent_positions;
  c.check(divergences["R-IPC"] == std::vector<std::size_t>{9, 10, 11, 12}, "R-IPC positions");
  c.check(divergences["R-HPC"] == std::vector<std::size_t>{7, 8, 9, 10, 11, 12}, "R-HPC positions");
  for (const char* clean : {"R-HPPC", "Q-HPC", "S|Q"}) {
    c.check(divergences[clean].empty(), std::string(clean) + " diverges");
  }
  c.check(report.erratum_set_matches(), "erratum set");
  return c.report();
}

bool criterion_measures() {
  Criterion c(3, "measure identities and worked-example measure values");
  Rng rng(3003);
  std::size_t pairs = 0;
  bool gk_ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto parts = all_partitions(n);
    for (const auto& a : parts) {
      const auto q = space_from_labels(a);
      for (const auto& b : parts) {
        const auto r = space_from_labels(b);
        gk_ok = gk_ok && granular_dependency(q, r).sum() == dependency_degree(q, r);
        ++pairs;
      }
    }
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 7 + i % 6;
    const auto q = random_equivalence(n, rng);
    const auto r = random_equivalence(n, rng);
    gk_ok = gk_ok && granular_dependency(q, r).sum() == dependency_degree(q, r);
    ++pairs;
  }
  c.check(gk_ok, "sum gk = delta");
  c.note("sum gk = delta on " + std::to_string(pairs) + " pairs");

  const auto r = paper_example::r_space();
  const auto q = paper_example::q_space();
  const Rational dqr = dependency_degree(q, r);
  const Rational drq = dependency_degree(r, q);
  const Rational cons = consistency_degree(q, r, ConsistencyParams(Rational(2)));
  c.check(dqr == make_rational(5, 12), "delta(Q,R) = 5/12 expected, computed " + to_string(dqr));
  c.check(drq == 1, "delta(R,Q) = 1 expected, computed " + to_string(drq));
  c.check(cons == make_rational(9, 16), "Cons(Q,R; 2) = 9/16 expected, computed " + to_string(cons));

  bool gcons_ok = true;
  for (int n : {0, 1, 2, 5}) {
    const ConsistencyParams params{Rational(n)};
    for (int i = 0; i < 100; ++i) {
      const std::size_t size = 1 + i % 10;
      const auto a = random_equivalence(size, rng);
      const auto b = random_equivalence(size, rng);
      gcons_ok = gcons_ok && granular_consistency(a, b, params).sum() == consistency_degree(a, b, params);
    }
  }
  c.check(gcons_ok, "sum gcons = cons");
  return c.report();
}

// X drawn either freely or as a union of classes so the definite branch is hit.
ElementSet draw_set(const ApproximationSpace& s, Rng& rng) {
  if (std::bernoulli_distribution(0.5)(rng)) return random_subset(s.size(), rng, 0.6);
  ElementSet out(s.size());
  const Granulation g = classes(s);
  for (const auto& b : g.blocks()) {
    if (std::bernoulli_distribution(0.6)(rng)) out |= b;
  }
  return out;
}

bool criterion_inclusion() {
  Criterion c(4, "granular inclusion properties on 500 random triples");
  Rng rng(4004);
  std::size_t definite_cases = 0, uniform_cases = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 10;
    const auto s = random_equivalence(n, rng);
    const auto x = draw_set(s, rng);
    const auto y = draw_set(s, rng);
    const auto k = granular_inclusion(s, x, y);
    const auto lx = lower(s, x);
    const Granulation g = classes(s);
    if (lx.none()) {
      ++uniform_cases;
      c.check(k.values == std::vector<Rational>(g.size(), make_rational(1, static_cast<std::int64_t>(g.size()))),
              "uniform branch at triple " + std::to_string(i));
      continue;
    }
    const Rational expected_sum =
        make_rational(static_cast<std::int64_t>(lower(s, x & y).count()), static_cast<std::int64_t>(lx.count()));
    c.check(k.sum() == expected_sum, "sum at triple " + std::to_string(i));
    std::vector<Rational> componentwise;
    for (const auto& b : g.blocks()) {
      componentwise.push_back(b.is_subset_of(x & y)
                                  ? make_rational(static_cast<std::int64_t>(b.count()),
                                                  static_cast<std::int64_t>(lx.count()))
                                  : Rational(0));
    }
    c.check(k.values == componentwise, "non-uniform components at triple " + std::to_string(i));
    if (is_definite(s, x) && is_definite(s, x & y)) {
      ++definite_cases;
      c.check(k.sum() == rough_inclusion(x, y), "k_star = k at triple " + std::to_string(i));
    }
  }
  c.note(std::to_string(definite_cases) + " definite, " + std::to_string(uniform_cases) + " empty-lower cases");
  return c.report();
}

bool criterion_granules() {
  Criterion c(5, "granule recovery from HPC, maximal IPC counts, IPC negative witness");
  std::size_t cases = 0;
  bool hpc_ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& labels : all_partitions(n)) {
      const auto s = space_from_labels(labels);
      const auto expected = blocks_of(classes(s));
      for_each_order(n, [&](const std::vector<ElementIndex>& e) {
        hpc_ok = hpc_ok && blocks_of(granules_from_hpc(hpc(s, Order(e)), s).blocks) == expected;
        ++cases;
      });
    }
  }
  Rng rng(5005);
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_equivalence(8, rng);
    hpc_ok = hpc_ok && blocks_of(granules_from_hpc(hpc(s, random_order(8, rng)), s).blocks) ==
                           blocks_of(classes(s));
    ++cases;
  }
  c.check(hpc_ok, "granules_from_hpc");
  c.note(std::to_string(cases) + " (space, order) cases");

  bool maximal_ok = true;
  std::size_t spaces = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& labels : all_partitions(n)) {
      const auto s = space_from_labels(labels);
      maximal_ok = maximal_ok && blocks_of(maximal_ipc_granules(s).blocks) == blocks_of(classes(s));
      ++spaces;
    }
  }
  c.check(maximal_ok, "maximal_ipc_granules");
  c.note(std::to_string(spaces) + " equivalences for maximal IPC");

  const auto r = paper_example::r_space();
  const auto split = split_ipc_count(ipc(r, paper_example::presented_order()));
  c.check(blocks_of(split) != blocks_of(classes(r)), "IPC negative witness on R");
  return c.report();
}

bool criterion_countability() {
  Criterion c(6, "countability indices, exact and sampled");
  const auto ab = space_from_pairs(3, {{0, 1}}, {false, true, false});
  const auto idx = std::get<Rational>(index_exact(ab, CountMethod::Ippc).index);
  c.check(idx == make_rational(1, 3), "IPPC index of sym{(a,b)} = " + to_string(idx));

  std::size_t graphs = 0;
  bool hppc_ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<IndexPair> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
      std::vector<IndexPair> pairs;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (mask >> k & 1U) pairs.push_back(edges[k]);
      }
      const auto s = space_from_pairs(n, pairs);
      const auto h = std::get<Rational>(index_exact(s, CountMethod::Hppc).index);
      hppc_ok = hppc_ok && (h == 0 || h == 1) && (h == 1) == pairs.empty();
      ++graphs;
    }
  }
  c.check(hppc_ok, "HPPC index in {0,1}");
  c.note("HPPC checked on all " + std::to_string(graphs) + " graphs with n <= 6");

  Rng rng(6006);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + i % 5;
    const auto s = random_relation(n, 0.25, rng);
    for (auto m : {CountMethod::Ippc, CountMethod::Hppc}) {
      const double exact = to_double(std::get<Rational>(index_exact(s, m).index));
      const auto est = std::get<IndexEstimate>(index_estimate(s, m, 10000, 600 + i).index);
      worst = std::max(worst, std::abs(est.estimate - exact));
    }
  }
  c.check(worst < 0.05, "Monte Carlo error " + std::to_string(worst));
  c.note("worst Monte Carlo error " + std::to_string(worst));
  return c.report();
}

// Isomorphism invariants of a partial operation table.
std::multiset<std::tuple<int, int, bool>> table_profile(const OperationTable& t) {
  std::multiset<std::tuple<int, int, bool>> out;
  for (std::size_t a = 0; a < t.size(); ++a) {
    int row = 0, col = 0;
    for (std::size_t b = 0; b < t.size(); ++b) {
      row += t[a][b].has_value();
      col += t[b][a].has_value();
    }
    out.insert({row, col, t[a][a] == a});
  }
  return out;
}

bool criterion_cipca() {
  Criterion c(7, "signature quotient sizes, well-defined composition, relabeling, n = 5 table time");
  bool sizes_ok = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    const ApproximationSpace d(Universe(letters(n)), Relation::diagonal(n));
    const ApproximationSpace k(Universe(letters(n)), Relation::complete(n));
    sizes_ok = sizes_ok && quotient(d).size() == 1 && quotient(k).size() == 1;
  }
  const auto ab = space_from_pairs(3, {{0, 1}}, ClosureKinds::equivalence());
  sizes_ok = sizes_ok && quotient(ab).size() == 3;
  c.check(sizes_ok, "quotient sizes");

  // Recompute every class product by brute force and compare with odot.
  bool odot_ok = true;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& labels : all_partitions(n)) {
      const auto q = quotient(space_from_labels(labels));
      for (std::size_t a = 0; a < q.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) {
          std::set<std::size_t> images;
          for (const auto& x : q[a].members) {
            for (const auto& y : q[b].members) images.insert(q.class_of(compose(x, y)));
          }
          const auto got = odot(q, a, b);
          odot_ok = odot_ok && (images.size() == 1 ? got == *images.begin() : !got.has_value());
          ++pairs;
        }
      }
    }
  }
  c.check(odot_ok, "odot well-definedness");
  c.note("odot checked on " + std::to_string(pairs) + " class pairs");

  Rng rng(7007);
  int invariant = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 3 + i % 3;
    const auto s = random_relation(n, 0.3, rng);
    const Order sigma = random_order(n, rng);
    const std::vector<ElementIndex> map(sigma.elements().begin(), sigma.elements().end());
    const ApproximationSpace moved(s.universe(), s.relation().relabeled(map));
    const auto q1 = quotient(s);
    const auto q2 = quotient(moved);
    bool same = q1.size() == q2.size();
    if (same) {
      std::multiset<std::size_t> sizes1, sizes2;
      for (const auto& k : q1.classes()) sizes1.insert(k.members.size());
      for (const auto& k : q2.classes()) sizes2.insert(k.members.size());
      same = sizes1 == sizes2 && table_profile(operation_table(q1)) == table_profile(operation_table(q2));
    }
    invariant += same;
  }
  c.check(invariant == 50, "table invariants differ (no isomorphism) for " + std::to_string(50 - invariant) +
                              "/50 conjugations");

  // Every equivalence on five elements; the slowest single build is timed.
  double slowest = 0.0;
  std::size_t largest = 0;
  for (const auto& labels : all_partitions(5)) {
    const auto start = Clock::now();
    const auto q5 = quotient(space_from_labels(labels));
    const auto table = operation_table(q5);
    slowest = std::max(slowest, seconds_since(start));
    largest = std::max(largest, table.size());
  }
  c.check(slowest < 10.0, "n = 5 table time " + std::to_string(slowest));
  std::ostringstream t;
  t << "n = 5 tables up to " << largest << "x" << largest << ", slowest " << slowest << " s";
  c.note(t.str());
  return c.report();
}

bool criterion_tokens() {
  Criterion c(8, "token invariants over random space/order draws");
  Rng rng(8008);
  const int draws = 20000;
  bool beta_ok = true, alpha_ok = true, subset_ok = true, values_ok = true;
  for (int i = 0; i < draws; ++i) {
    const std::size_t n = 1 + i % 12;
    const auto s = i % 2 ? random_equivalence(n, rng) : random_relation(n, 0.2, rng);
    const Order o = random_order(n, rng);
    for (auto m : {CountMethod::Ipc, CountMethod::Hpc}) {
      const auto t = count(s, o, m).tokens;
      for (std::size_t p = 1; p < t.size(); ++p) {
        const auto step = t[p].two_type() - t[p - 1].two_type();
        beta_ok = beta_ok && t[p].two_type() >= t[p - 1].two_type() && step <= 1;
        if (step == 0) alpha_ok = alpha_ok && t[p].alpha() == t[p - 1].alpha() + 1;
      }
    }
    const auto h = hppc(s, o).tokens;
    const auto ip = ippc(s, o).tokens;
    for (const auto* t : {&h, &ip}) {
      std::uint32_t expected = 1;
      for (const auto& tok : *t) {
        if (!tok.is_defined()) continue;
        values_ok = values_ok && tok.alpha() == expected++;
      }
    }
    for (std::size_t p = 0; p < n; ++p) subset_ok = subset_ok && (!h[p].is_defined() || ip[p].is_defined());
  }
  c.check(beta_ok, "type index non-decreasing with unit steps");
  c.check(alpha_ok, "alpha steps by one within a type");
  c.check(subset_ok, "HPPC defined set inside IPPC defined set");
  c.check(values_ok, "defined partial values are 1,2,3,...");
  c.note(std::to_string(draws) + " draws");
  return c.report();
}

}  // namespace

int main() {
  int failed = 0;
  for (auto* criterion : {criterion_golden, criterion_erratum, criterion_measures, criterion_inclusion,
                          criterion_granules, criterion_countability, criterion_cipca, criterion_tokens}) {
    failed += !criterion();
  }
  std::cout << (8 - failed) << "/8 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
