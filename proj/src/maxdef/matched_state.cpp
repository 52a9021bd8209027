#include "sigdef/matched_state.hpp"

#include <algorithm>

namespace sigdef {

namespace {

void insert_sorted(std::vector<Node> &list, Node x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it == list.end() || *it != x) list.insert(it, x);
}

void erase_sorted(std::vector<Node> &list, Node x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it != list.end() && *it == x) list.erase(it);
}

}  // namespace

MatchedState::MatchedState(std::size_t pairs) {
  std::vector<std::string> names;
  std::vector<VertexSet> recovery;
  for (std::size_t p = 0; p < pairs; ++p) {
    names.push_back("a" + std::to_string(p + 1));
    names.push_back("b" + std::to_string(p + 1));
    recovery.push_back({side_a(p)});
    recovery.push_back({side_b(p)});
  }
  *this = MatchedState(std::move(names), std::move(recovery));
}

MatchedState::MatchedState(std::vector<std::string> names, std::vector<VertexSet> recovery)
    : names_(std::move(names)), recovery_(std::move(recovery)) {
  if (names_.size() % 2 != 0 || names_.size() != recovery_.size())
    throw std::invalid_argument("matched state needs two named nodes per pair");
  const std::size_t nodes = names_.size();
  neg_.resize(nodes);
  pair_alive_.assign(nodes / 2, true);
  absorbed_.assign(nodes, false);
  forbidden_.assign(nodes, false);
  in_cover_.assign(nodes, false);
  live_pairs_ = nodes / 2;
  for (const auto &set : recovery_) universe_.insert(universe_.end(), set.begin(), set.end());
  std::sort(universe_.begin(), universe_.end());
}

std::vector<Node> MatchedState::live_nodes() const {
  std::vector<Node> out;
  for (Node x = 0; x < node_slots(); ++x)
    if (alive(x)) out.push_back(x);
  return out;
}

bool MatchedState::adjacent(Node x, Node y) const {
  const auto &list = neg_.at(x);
  return std::binary_search(list.begin(), list.end(), y);
}

std::vector<Node> MatchedState::forbidden_nodes() const {
  std::vector<Node> out;
  for (Node x = 0; x < node_slots(); ++x)
    if (forbidden_[x]) out.push_back(x);
  return out;
}

void MatchedState::add_negative_edge(Node x, Node y) {
  if (!alive(x) || !alive(y)) throw std::invalid_argument("edge on a dead node");
  if (y == partner(x)) return;
  insert_sorted(neg_[x], y);
  insert_sorted(neg_[y], x);
}

void MatchedState::remove_negative_edge(Node x, Node y) {
  erase_sorted(neg_.at(x), y);
  erase_sorted(neg_.at(y), x);
}

void MatchedState::forbid(Node x) {
  if (!alive(x)) throw std::invalid_argument("cannot forbid a dead node");
  forbidden_[x] = true;
}

std::vector<Node> MatchedState::place_in_cover(Node x) {
  if (!alive(x)) throw InvariantViolation("placing dead node " + names_.at(x) + " in S");
  cover_.push_back(x);
  in_cover_[x] = true;
  std::vector<Node> added;
  for (Node y : neg_[x]) {
    if (!forbidden_[y]) {
      forbidden_[y] = true;
      added.push_back(y);
    }
  }
  delete_pair(pair_of(x));
  std::erase_if(added, [this](Node y) { return !alive(y); });
  return added;
}

void MatchedState::delete_pair(std::size_t p) {
  if (!pair_alive_.at(p)) throw InvariantViolation("deleting dead pair");
  for (Node x : {side_a(p), side_b(p)}) {
    for (Node y : neg_[x])
      if (y != x) erase_sorted(neg_[y], x);
    neg_[x].clear();
    forbidden_[x] = false;
  }
  pair_alive_[p] = false;
  --live_pairs_;
}

void MatchedState::identify(Node keep, Node gone) {
  if (keep == gone || !alive(keep) || !alive(gone))
    throw InvariantViolation("invalid identification of " + names_.at(gone) + " into " +
                             names_.at(keep));
  std::vector<Node> moved = std::move(neg_[gone]);
  neg_[gone].clear();
  for (Node y : moved) {
    if (y != gone) erase_sorted(neg_[y], gone);
    Node target = (y == gone) ? keep : y;
    insert_sorted(neg_[target], keep);
    insert_sorted(neg_[keep], target);
  }
  auto &into = recovery_[keep];
  into.insert(into.end(), recovery_[gone].begin(), recovery_[gone].end());
  std::sort(into.begin(), into.end());
  recovery_[gone].clear();
  if (forbidden_[gone]) forbidden_[keep] = true;
  forbidden_[gone] = false;
  absorbed_[gone] = true;
}

void MatchedState::retire_absorbed_pair(std::size_t p) {
  if (!pair_alive_.at(p) || !absorbed_[side_a(p)] || !absorbed_[side_b(p)])
    throw InvariantViolation("retiring a pair that was not fully absorbed");
  pair_alive_[p] = false;
  --live_pairs_;
}

void MatchedState::check_invariants() const {
  auto fail = [this](const std::string &what, Node x) {
    throw InvariantViolation(what + " at node " + names_.at(x));
  };
  std::size_t live_pair_count = 0;
  for (std::size_t p = 0; p < pair_slots(); ++p) {
    if (!pair_alive_[p]) continue;
    ++live_pair_count;
    // Positive edges form a perfect matching: both sides of a live pair live.
    if (!alive(side_a(p)) || !alive(side_b(p))) fail("half-absorbed live pair", side_a(p));
  }
  if (live_pair_count != live_pairs_) throw InvariantViolation("live pair count out of sync");

  for (Node x = 0; x < node_slots(); ++x) {
    const auto &list = neg_[x];
    if (!alive(x)) {
      if (!list.empty()) fail("dead node keeps edges", x);
      if (forbidden_[x]) fail("dead node in B", x);
      continue;
    }
    if (in_cover_[x]) fail("live node in S", x);
    if (recovery_[x].empty()) fail("empty recovery set", x);
    if (!std::is_sorted(list.begin(), list.end()) ||
        std::adjacent_find(list.begin(), list.end()) != list.end())
      fail("unsorted adjacency", x);
    for (Node y : list) {
      if (!alive(y)) fail("edge to dead node", x);
      if (y == partner(x)) fail("negative edge between partners", x);
      if (y != x && !adjacent(y, x)) fail("asymmetric adjacency", x);
    }
  }

  std::vector<bool> pair_used(pair_slots(), false);
  for (Node x : cover_) {
    if (forbidden_[x]) fail("node in both S and B", x);
    if (pair_used[pair_of(x)]) fail("both sides of a pair in S", x);
    pair_used[pair_of(x)] = true;
  }

  VertexSet all;
  for (const auto &set : recovery_) all.insert(all.end(), set.begin(), set.end());
  std::sort(all.begin(), all.end());
  if (all != universe_) throw InvariantViolation("recovery sets no longer partition the vertices");
}

}  // namespace sigdef
