#include "mfill/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "mfill/errors.hpp"

namespace mfill {

void GroupPresentation::validate() const {
  if (generators.empty()) throw ValidationError("presentation needs generators");
  std::set<char> gens;
  for (const std::string& g : generators) {
    if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
      throw ValidationError("generator must be a single lowercase letter: '" + g + "'");
    if (!gens.insert(g[0]).second)
      throw ValidationError("duplicate generator '" + g + "'");
  }
  for (const std::string& r : relators) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(r[i])));
      if (!gens.count(lower))
        throw ValidationError("unbalanced relator alphabet: '" + std::string(1, r[i]) +
                              "' in relator '" + r + "' is not a generator");
      if (i + 1 < r.size()) {
        char a = r[i], b = r[i + 1];
        if (a != b && std::tolower(static_cast<unsigned char>(a)) ==
                          std::tolower(static_cast<unsigned char>(b)))
          throw ValidationError("relator '" + r + "' is not freely reduced");
      }
    }
  }
}

namespace {

constexpr std::size_t kUndef = static_cast<std::size_t>(-1);

struct CosetTable {
  std::size_t gen_count;
  std::vector<std::vector<std::size_t>> act;  // [state][dir], dirs: 0..2g-1
  std::vector<std::size_t> parent;            // union-find
  std::deque<std::pair<std::size_t, std::size_t>> coincidences;

  explicit CosetTable(std::size_t g) : gen_count(g) {}

  std::size_t inv(std::size_t dir) const {
    return dir < gen_count ? dir + gen_count : dir - gen_count;
  }

  std::size_t rep(std::size_t s) {
    while (parent[s] != s) {
      parent[s] = parent[parent[s]];
      s = parent[s];
    }
    return s;
  }

  std::size_t new_state() {
    act.emplace_back(2 * gen_count, kUndef);
    parent.push_back(act.size() - 1);
    return act.size() - 1;
  }

  std::size_t target(std::size_t s, std::size_t d) {
    std::size_t t = act[rep(s)][d];
    return t == kUndef ? kUndef : rep(t);
  }

  void set_arrow(std::size_t s, std::size_t d, std::size_t t) {
    s = rep(s);
    t = rep(t);
    std::size_t cur = target(s, d);
    if (cur != kUndef) {
      if (cur != t) coincidences.push_back({cur, t});
      return;
    }
    act[s][d] = t;
    std::size_t back = target(t, inv(d));
    if (back == kUndef)
      act[t][inv(d)] = s;
    else if (back != s)
      coincidences.push_back({back, s});
  }

  void process_coincidences() {
    while (!coincidences.empty()) {
      auto [a, b] = coincidences.front();
      coincidences.pop_front();
      a = rep(a);
      b = rep(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent[b] = a;  // b merges into a
      for (std::size_t d = 0; d < 2 * gen_count; ++d) {
        std::size_t tb = act[b][d];
        if (tb == kUndef) continue;
        tb = rep(tb);
        std::size_t ta = act[a][d] == kUndef ? kUndef : rep(act[a][d]);
        if (ta == kUndef) {
          act[a][d] = tb;
          std::size_t back = act[tb][inv(d)] == kUndef ? kUndef : rep(act[tb][inv(d)]);
          if (back == kUndef)
            act[tb][inv(d)] = a;
          else if (back != a)
            coincidences.push_back({back, a});
        } else if (ta != tb) {
          coincidences.push_back({ta, tb});
        }
      }
    }
  }

  /// Scan one relator at one state: deduce the single missing arrow or
  /// record a coincidence when the walk closes up with a mismatch.
  bool scan(std::size_t s, const std::vector<std::size_t>& word) {
    s = rep(s);
    std::size_t f = s, b = s;
    std::size_t i = 0, j = word.size();
    while (i < j) {
      std::size_t t = target(f, word[i]);
      if (t == kUndef) break;
      f = t;
      ++i;
    }
    if (i == j) {
      if (f != b) {
        coincidences.push_back({f, b});
        return true;
      }
      return false;
    }
    while (j > i + 1) {
      std::size_t t = target(b, inv(word[j - 1]));
      if (t == kUndef) break;
      b = t;
      --j;
    }
    if (j == i + 1) {
      set_arrow(f, word[i], b);
      return true;
    }
    return false;
  }
};

}  // namespace

Graph cayley_ball(const GroupPresentation& p, int radius, std::size_t state_cap) {
  state_cap = env_size_cap(state_cap);
  p.validate();
  if (radius < 0) throw ValidationError("radius must be >= 0");
  const std::size_t g = p.generators.size();

  std::map<char, std::size_t> dir_of;
  for (std::size_t i = 0; i < g; ++i) dir_of[p.generators[i][0]] = i;
  std::vector<std::vector<std::size_t>> relator_words;
  std::size_t max_rel_len = 0;
  for (const std::string& r : p.relators) {
    std::vector<std::size_t> w;
    for (char c : r) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      std::size_t d = dir_of.at(lower);
      w.push_back(std::isupper(static_cast<unsigned char>(c)) ? d + g : d);
    }
    if (!w.empty()) {
      max_rel_len = std::max(max_rel_len, w.size());
      relator_words.push_back(std::move(w));
    }
  }

  const std::size_t padded = static_cast<std::size_t>(radius) + max_rel_len;
  CosetTable table(g);
  std::size_t root = table.new_state();

  auto depths = [&]() {
    // BFS over defined transitions from the root representative.
    std::vector<std::size_t> depth(table.act.size(), kUndef);
    std::deque<std::size_t> q;
    std::size_t r0 = table.rep(root);
    depth[r0] = 0;
    q.push_back(r0);
    while (!q.empty()) {
      std::size_t s = q.front();
      q.pop_front();
      for (std::size_t d = 0; d < 2 * g; ++d) {
        std::size_t t = table.target(s, d);
        if (t != kUndef && depth[t] == kUndef) {
          depth[t] = depth[s] + 1;
          q.push_back(t);
        }
      }
    }
    return depth;
  };

  // Alternate definition passes with full relator closure until stable.
  bool changed = true;
  while (changed) {
    changed = false;

    // Close under the relators.
    bool scans = true;
    while (scans) {
      scans = false;
      for (std::size_t s = 0; s < table.act.size(); ++s) {
        if (table.rep(s) != s) continue;
        for (const auto& w : relator_words)
          if (table.scan(s, w)) scans = true;
        table.process_coincidences();
      }
    }

    // Define missing arrows on the padded ball, one frontier at a time.
    std::vector<std::size_t> depth = depths();
    for (std::size_t s = 0; s < table.act.size() && !changed; ++s) {
      if (table.rep(s) != s || depth[s] == kUndef || depth[s] >= padded) continue;
      for (std::size_t d = 0; d < 2 * g; ++d) {
        if (table.target(s, d) != kUndef) continue;
        if (table.act.size() >= state_cap)
          throw CapError("cayley ball state cap exceeded (" +
                         std::to_string(state_cap) + ")");
        std::size_t t = table.new_state();
        table.set_arrow(s, d, t);
        table.process_coincidences();
        changed = true;
      }
    }
  }

  // Shortlex naming: BFS from the identity, directions in alphabet order
  // (all lowercase generators first, then the uppercase inverses).
  std::vector<std::size_t> depth = depths();
  std::size_t r0 = table.rep(root);
  std::map<std::size_t, std::string> word_of;
  std::vector<std::size_t> order;
  word_of[r0] = "";
  order.push_back(r0);
  std::deque<std::size_t> q = {r0};
  auto dir_char = [&](std::size_t d) {
    char c = p.generators[d % g][0];
    return d < g ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  };
  while (!q.empty()) {
    std::size_t s = q.front();
    q.pop_front();
    if (word_of[s].size() >= static_cast<std::size_t>(radius)) continue;
    for (std::size_t d = 0; d < 2 * g; ++d) {
      std::size_t t = table.target(s, d);
      if (t == kUndef || word_of.count(t)) continue;
      word_of[t] = word_of[s] + dir_char(d);
      order.push_back(t);
      q.push_back(t);
    }
  }

  std::vector<std::string> labels;
  std::map<std::size_t, std::size_t> index_of;
  for (std::size_t i = 0; i < order.size(); ++i) {
    index_of[order[i]] = i;
    labels.push_back(word_of[order[i]].empty() ? "e" : word_of[order[i]]);
  }

  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (std::size_t s : order)
    for (std::size_t d = 0; d < g; ++d) {
      std::size_t t = table.target(s, d);
      if (t == kUndef || !index_of.count(t)) continue;
      std::size_t a = index_of[s], b = index_of[t];
      if (a == b) continue;  // torsion loops are dropped
      edge_set.insert({std::min(a, b), std::max(a, b)});
    }
  std::vector<Graph::Edge> edges;
  for (const auto& [a, b] : edge_set) edges.push_back({a, b, Rat(1)});
  (void)depth;
  return Graph(std::move(labels), std::move(edges));
}

}  // namespace mfill
