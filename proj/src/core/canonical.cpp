#include "core/canonical.hpp"

#include <algorithm>
#include <functional>

#include "core/error.hpp"
#include "core/graph_io.hpp"

namespace qx {

namespace {

// Iterative refinement: vertices are colored by degree, then repeatedly by
// (color, sorted neighbor colors) until the partition stabilizes. The color
// order is a pure function of isomorphism-invariant data, so isomorphic
// graphs end up with corresponding classes in the same order.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);

  {
    std::vector<int> degrees;
    degrees.reserve(n);
    for (int u = 0; u < n; ++u) degrees.push_back(g.degree(u));
    std::vector<int> uniq = degrees;
    std::sort(uniq.begin(), uniq.end(), std::greater<int>());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int u = 0; u < n; ++u)
      color[u] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), degrees[u],
                           std::greater<int>()) -
          uniq.begin());
  }

  int count = 0;
  for (int c : color) count = std::max(count, c + 1);

  while (true) {
    std::vector<std::vector<int>> sigs(n);
    for (int u = 0; u < n; ++u) {
      std::vector<int>& sig = sigs[u];
      sig.reserve(g.degree(u) + 1);
      sig.push_back(color[u]);
      for (int v : g.neighbors(u)) sig.push_back(color[v]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<std::vector<int>> uniq = sigs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    int next_count = static_cast<int>(uniq.size());
    for (int u = 0; u < n; ++u)
      color[u] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs[u]) - uniq.begin());
    if (next_count == count) break;
    count = next_count;
  }
  return color;
}

// Branch-and-bound over class-respecting orderings. A vertex placed at
// position p contributes a p-bit row (adjacency to earlier positions, MSB
// first); the target encoding is the lexicographically greatest row
// sequence. Only candidates with the maximal row can extend a maximal
// ordering, and mutual twins produce identical subtrees, so both are pruned.
struct CanonSearch {
  int n = 0;
  std::vector<std::uint64_t> mask;   // neighbor bitmask per vertex
  std::vector<int> color;            // refinement class per vertex
  std::vector<int> position_class;   // class required at each position
  std::vector<int> placed;
  std::vector<char> used;
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> best_rows;
  bool have_best = false;

  bool twins(int a, int b) const {
    std::uint64_t clear = ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    return (mask[a] & clear) == (mask[b] & clear);
  }

  // equal_prefix: rows[0..pos-1] equals the best prefix. Otherwise the
  // prefix strictly exceeds it (or no best exists yet). Returns whether the
  // best encoding was replaced within this subtree.
  bool dfs(int pos, bool equal_prefix) {
    if (pos == n) {
      if (equal_prefix && have_best) return false;  // identical to best
      best_rows = rows;
      have_best = true;
      return true;
    }

    const int cls = position_class[pos];
    std::vector<std::pair<std::uint64_t, int>> candidates;
    std::uint64_t max_row = 0;
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != cls) continue;
      std::uint64_t row = 0;
      for (int i = 0; i < pos; ++i)
        row = (row << 1) | ((mask[v] >> placed[i]) & 1);
      candidates.emplace_back(row, v);
      max_row = std::max(max_row, row);
    }

    // Only a maximal row at this position can extend a maximal ordering of
    // this prefix, and if even that loses to the best, the node is dead.
    if (equal_prefix && have_best && max_row < best_rows[pos]) return false;

    bool updated = false;
    std::vector<int> tried;
    for (const auto& [row, v] : candidates) {
      if (row != max_row) continue;

      bool duplicate = false;
      for (int t : tried) {
        if (twins(t, v)) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      tried.push_back(v);

      bool child_equal =
          equal_prefix && have_best && max_row == best_rows[pos];

      placed.push_back(v);
      used[v] = 1;
      rows[pos] = max_row;
      bool child_updated = dfs(pos + 1, child_equal);
      used[v] = 0;
      placed.pop_back();

      if (child_updated) {
        updated = true;
        // The new best runs through this node, so the prefix now matches it.
        equal_prefix = true;
      }
    }
    return updated;
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int ceiling) {
  const int n = g.vertex_count();
  if (ceiling > 64) ceiling = 64;
  if (n > ceiling)
    fail(ErrorCode::limit, "canonical form limited to n <= " +
                               std::to_string(ceiling) + " (got n=" +
                               std::to_string(n) + ")");

  CanonicalForm form;
  form.n = n;
  if (n <= 1) return form;

  CanonSearch search;
  search.n = n;
  search.color = refine_colors(g);
  search.mask.assign(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) search.mask[u] |= std::uint64_t{1} << v;

  int classes = 0;
  for (int c : search.color) classes = std::max(classes, c + 1);
  std::vector<int> class_size(classes, 0);
  for (int c : search.color) ++class_size[c];
  search.position_class.reserve(n);
  for (int c = 0; c < classes; ++c)
    for (int i = 0; i < class_size[c]; ++i) search.position_class.push_back(c);

  search.used.assign(n, 0);
  search.rows.assign(n, 0);
  search.dfs(0, false);

  const int total_bits = n * (n - 1) / 2;
  form.bits.assign((total_bits + 7) / 8, 0);
  int bit_index = 0;
  for (int pos = 1; pos < n; ++pos) {
    for (int i = 0; i < pos; ++i) {
      int bit = static_cast<int>((search.best_rows[pos] >> (pos - 1 - i)) & 1);
      if (bit)
        form.bits[bit_index / 8] |= std::uint8_t(0x80u >> (bit_index % 8));
      ++bit_index;
    }
  }
  return form;
}

std::string CanonicalForm::key() const {
  std::string k;
  k.reserve(bits.size() + 2);
  k.push_back(static_cast<char>((n >> 8) & 0xff));
  k.push_back(static_cast<char>(n & 0xff));
  for (std::uint8_t b : bits) k.push_back(static_cast<char>(b));
  return k;
}

std::string CanonicalForm::to_graph6() const {
  return graph6_from_bitstream(n, [this](int index) {
    return (bits[index / 8] >> (7 - index % 8)) & 1;
  });
}

bool isomorphic(const Graph& a, const Graph& b, int ceiling) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int u = 0; u < a.vertex_count(); ++u) da.push_back(a.degree(u));
  for (int u = 0; u < b.vertex_count(); ++u) db.push_back(b.degree(u));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a, ceiling) == canonical_form(b, ceiling);
}

}  // namespace qx
