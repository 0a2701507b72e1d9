#include "matchflip/strongly_orderable.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "matchflip/error.hpp"

namespace matchflip {

namespace {

std::vector<int> positions_of(int n, std::span<const int> order) {
  if (static_cast<int>(order.size()) != n)
    fail(ErrorCode::NotAPermutation, "order has " + std::to_string(order.size()) + " entries, expected " +
                                         std::to_string(n));
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[v] >= 0) fail(ErrorCode::NotAPermutation, "bad entry " + std::to_string(v));
    pos[v] = i;
  }
  return pos;
}

using Bits = std::vector<std::uint64_t>;

int first_bit(const Bits& b, std::size_t from_word = 0) {
  for (std::size_t w = from_word; w < b.size(); ++w)
    if (b[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w])));
  return -1;
}

}  // namespace

StrongOrderCheck verify_strong_ordering(const Graph& g, std::span<const int> order) {
  const int n = g.n();
  std::vector<int> pos = positions_of(n, order);
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  // Neighbourhoods as bitsets over positions.
  std::vector<Bits> nb(static_cast<std::size_t>(n), Bits(words, 0));
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) nb[pos[v]][pos[w] / 64] |= std::uint64_t{1} << (pos[w] % 64);

  // For i < j only the earliest common neighbour k matters: any later
  // neighbour l of v_i (l != j) must then be a neighbour of v_j.
  Bits scratch(words);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (std::size_t w = 0; w < words; ++w) scratch[w] = nb[i][w] & nb[j][w];
      int k = first_bit(scratch);
      if (k < 0) continue;
      for (std::size_t w = 0; w < words; ++w) scratch[w] = nb[i][w] & ~nb[j][w];
      scratch[static_cast<std::size_t>(j) / 64] &= ~(std::uint64_t{1} << (j % 64));
      std::size_t kw = static_cast<std::size_t>(k) / 64;
      scratch[kw] &= ~((std::uint64_t{2} << (k % 64)) - 1);
      int l = first_bit(scratch, kw);
      if (l >= 0) {
        StrongOrderCheck bad;
        bad.valid = false;
        bad.witness = {order[i], order[j], order[k], order[l]};
        return bad;
      }
    }
  }
  return {};
}

StrongOrder::StrongOrder(const Graph& g, std::vector<int> order) : order_(std::move(order)) {
  auto check = verify_strong_ordering(g, order_);
  if (!check.valid) {
    const auto& w = check.witness;
    fail(ErrorCode::OrderInvalid, "edges " + std::to_string(w[0]) + "-" + std::to_string(w[2]) + ", " +
                                      std::to_string(w[0]) + "-" + std::to_string(w[3]) + ", " +
                                      std::to_string(w[1]) + "-" + std::to_string(w[2]) + " present but " +
                                      std::to_string(w[1]) + "-" + std::to_string(w[3]) + " missing");
  }
  index(g.n());
}

StrongOrder StrongOrder::trusted(int n, std::vector<int> order) {
  StrongOrder so;
  so.order_ = std::move(order);
  so.index(n);
  return so;
}

void StrongOrder::index(int n) { position_ = positions_of(n, order_); }

Matching canonical_matching(const Graph& g, const StrongOrder& order) {
  const int n = g.n();
  Matching m(n);
  std::vector<int> by_pos;
  for (int v : order.order()) {
    if (m.covers(v)) continue;
    by_pos.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::erase_if(by_pos, [&](int w) { return m.covers(w); });
    if (by_pos.empty()) fail(ErrorCode::NoPerfectMatching, "vertex " + std::to_string(v) + " cannot be matched");
    int best = *std::min_element(by_pos.begin(), by_pos.end(),
                                 [&](int a, int b) { return order.position(a) < order.position(b); });
    m.add(v, best);
  }
  return m;
}

namespace {

/// Flips n into the canonical matching, earliest vertex first.
std::vector<Move> to_canonical(const Graph& g, const StrongOrder& order, const Matching& canonical, Matching n) {
  SequenceBuilder seq(g, std::move(n));
  std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
  for (int v : order.order()) {
    if (removed[v]) continue;
    int p = canonical.mate(v);
    int q = seq.current().mate(v);
    if (p != q) {
      int r = seq.current().mate(p);
      if (!g.has_edge(q, r))
        fail(ErrorCode::OrderInvalid, "swap needs edge " + std::to_string(q) + "-" + std::to_string(r));
      seq.flip(v, q, r, p);
    }
    removed[v] = removed[p] = 1;
  }
  return seq.take_moves();
}

}  // namespace

ReconfigSequence solve_strongly_orderable(const Graph& g, const StrongOrder& order, const Matching& m_ini,
                                          const Matching& m_tar) {
  if (!m_ini.is_perfect() || !m_tar.is_perfect()) fail(ErrorCode::NotPerfect, "both matchings must be perfect");
  ReconfigSequence out{Mode::flip(), {}};
  if (m_ini == m_tar) return out;
  Matching canonical = canonical_matching(g, order);
  out.moves = to_canonical(g, order, canonical, m_ini);
  auto back = to_canonical(g, order, canonical, m_tar);
  auto tail = reversed(back);
  out.moves.insert(out.moves.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace matchflip
