#include "snark/flow_search.hpp"

#include <algorithm>
#include <numeric>

namespace snark {

namespace {

struct OutOfBudget {};

}  // namespace

const char* to_string(Search s) {
  switch (s) {
    case Search::found: return "found";
    case Search::none: return "none";
    case Search::undecided: return "undecided";
  }
  return "?";
}

FlowSearch::FlowSearch(const Multipole& m) : n_(m.num_vertices()) {
  const auto edges = static_cast<std::size_t>(m.num_edges());
  ends_.resize(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    const Edge& ed = m.edges()[e];
    ends_[e] = ed.is_loop() ? std::array<int, 2>{kFree, kFree} : ed.ends;
  }
  val_.assign(edges, 0);
  sum_.assign(static_cast<std::size_t>(n_), 0);
  unc_.assign(static_cast<std::size_t>(n_), 0);
  uncx_.assign(static_cast<std::size_t>(n_), 0);
  owner_.assign(static_cast<std::size_t>(n_), 0);
  owner_stamp_.assign(static_cast<std::size_t>(n_), 0);
  parent_.assign(edges, 0);
  reset();
}

void FlowSearch::reset() {
  std::fill(val_.begin(), val_.end(), 0);
  std::fill(sum_.begin(), sum_.end(), 0);
  std::fill(unc_.begin(), unc_.end(), 0);
  std::fill(uncx_.begin(), uncx_.end(), 0);
  trail_.clear();
  queue_.clear();
  nodes_ = 0;
  for (std::size_t e = 0; e < ends_.size(); ++e) {
    for (int x : ends_[e]) {
      if (x == kFree) continue;
      ++unc_[static_cast<std::size_t>(x)];
      uncx_[static_cast<std::size_t>(x)] ^= static_cast<int>(e) + 1;
    }
  }
  for (int x = 0; x < n_; ++x) {
    if (unc_[static_cast<std::size_t>(x)] == 1) queue_.push_back(x);
  }
}

bool FlowSearch::assign(int e, int c) {
  val_[static_cast<std::size_t>(e)] = c;
  trail_.push_back(e);
  bool ok = true;
  for (int x : ends_[static_cast<std::size_t>(e)]) {
    if (x == kFree) continue;
    const auto xi = static_cast<std::size_t>(x);
    sum_[xi] ^= c;
    --unc_[xi];
    uncx_[xi] ^= e + 1;
    if (unc_[xi] == 0) {
      if (sum_[xi] != 0) ok = false;
    } else if (unc_[xi] == 1) {
      queue_.push_back(x);
    }
  }
  return ok;
}

bool FlowSearch::propagate() {
  while (!queue_.empty()) {
    const int x = queue_.back();
    queue_.pop_back();
    const auto xi = static_cast<std::size_t>(x);
    if (unc_[xi] != 1) continue;
    const int f = uncx_[xi] - 1;
    const int c = sum_[xi];
    if (c == 0 || !assign(f, c)) {
      queue_.clear();
      return false;
    }
  }
  return true;
}

void FlowSearch::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const int e = trail_.back();
    trail_.pop_back();
    const int c = val_[static_cast<std::size_t>(e)];
    val_[static_cast<std::size_t>(e)] = 0;
    for (int x : ends_[static_cast<std::size_t>(e)]) {
      if (x == kFree) continue;
      const auto xi = static_cast<std::size_t>(x);
      sum_[xi] ^= c;
      ++unc_[xi];
      uncx_[xi] ^= e + 1;
    }
  }
  queue_.clear();
}

bool FlowSearch::fix(int edge, int value) {
  if (val_[static_cast<std::size_t>(edge)] != 0) return val_[static_cast<std::size_t>(edge)] == value;
  return assign(edge, value) && propagate();
}

std::vector<std::vector<int>> FlowSearch::split(const std::vector<int>& edges) {
  ++stamp_;
  auto find = [&](int e) {
    while (parent_[static_cast<std::size_t>(e)] != e) {
      parent_[static_cast<std::size_t>(e)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(e)])];
      e = parent_[static_cast<std::size_t>(e)];
    }
    return e;
  };
  for (int e : edges) parent_[static_cast<std::size_t>(e)] = e;
  for (int e : edges) {
    for (int x : ends_[static_cast<std::size_t>(e)]) {
      if (x == kFree) continue;
      const auto xi = static_cast<std::size_t>(x);
      if (owner_stamp_[xi] != stamp_) {
        owner_stamp_[xi] = stamp_;
        owner_[xi] = e;
      } else {
        const int a = find(e);
        const int b = find(owner_[xi]);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  // Each root is the least edge of its group.
  std::vector<std::vector<int>> groups;
  std::vector<std::pair<int, int>> root_slot;
  for (int e : edges) {
    const int r = find(e);
    auto it = std::find_if(root_slot.begin(), root_slot.end(), [&](const auto& p) { return p.first == r; });
    if (it == root_slot.end()) {
      root_slot.emplace_back(r, static_cast<int>(groups.size()));
      groups.emplace_back();
      groups.back().push_back(e);
    } else {
      groups[static_cast<std::size_t>(it->second)].push_back(e);
    }
  }
  return groups;
}

std::size_t FlowSearch::KeyHash::operator()(const std::vector<int>& k) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : k) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool FlowSearch::solve_group(const std::vector<int>& group) {
  if (group.size() > kMemoMaxEdges) return branch(group);
  // The outcome depends only on the group and the partial sums at its
  // vertices: every other edge at those vertices is already assigned.
  std::vector<int> key(group);
  key.push_back(-1);
  ++stamp_;
  for (int e : group) {
    for (int x : ends_[static_cast<std::size_t>(e)]) {
      if (x == kFree || owner_stamp_[static_cast<std::size_t>(x)] == stamp_) continue;
      owner_stamp_[static_cast<std::size_t>(x)] = stamp_;
      key.push_back(sum_[static_cast<std::size_t>(x)]);
    }
  }
  if (const auto it = memo_.find(key); it != memo_.end()) {
    if (it->second.empty()) return false;
    for (std::size_t i = 0; i < group.size(); ++i) assign(group[i], it->second[i]);
    queue_.clear();
    return true;
  }
  const bool ok = branch(group);
  if (memo_.size() >= kMemoMaxEntries) memo_.clear();
  std::vector<int> vals;
  if (ok) {
    vals.reserve(group.size());
    for (int e : group) vals.push_back(val_[static_cast<std::size_t>(e)]);
  }
  memo_.emplace(std::move(key), std::move(vals));
  return ok;
}

bool FlowSearch::branch(const std::vector<int>& group) {
  const int e = group.front();
  for (int c = 1; c <= 3; ++c) {
    if (limit_ != 0 && nodes_ >= limit_) throw OutOfBudget{};
    ++nodes_;
    const std::size_t mark = trail_.size();
    if (assign(e, c) && propagate()) {
      std::vector<int> rest;
      rest.reserve(group.size());
      for (int f : group) {
        if (val_[static_cast<std::size_t>(f)] == 0) rest.push_back(f);
      }
      bool ok = true;
      if (!rest.empty()) {
        for (const auto& sub : split(rest)) {
          if (!solve_group(sub)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return true;
    }
    undo(mark);
  }
  return false;
}

Search FlowSearch::solve(Budget budget) {
  limit_ = budget.nodes;
  if (!propagate()) return Search::none;
  std::vector<int> rest;
  for (int e = 0; e < static_cast<int>(val_.size()); ++e) {
    if (val_[static_cast<std::size_t>(e)] != 0) continue;
    if (ends_[static_cast<std::size_t>(e)][0] == kFree && ends_[static_cast<std::size_t>(e)][1] == kFree) {
      // loops and isolated edges are unconstrained
      assign(e, 1);
    } else {
      rest.push_back(e);
    }
  }
  const std::size_t mark = trail_.size();
  try {
    for (const auto& group : split(rest)) {
      if (!solve_group(group)) {
        undo(mark);
        return Search::none;
      }
    }
  } catch (const OutOfBudget&) {
    undo(mark);
    return Search::undecided;
  }
  return Search::found;
}

}  // namespace snark
