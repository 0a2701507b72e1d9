#include "matchflip/reconfig.hpp"

#include <algorithm>
#include <unordered_set>

#include "matchflip/error.hpp"

namespace matchflip {

Flip make_flip(std::vector<int> cycle) {
  if (cycle.empty()) return Flip{};
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return Flip{std::move(cycle)};
}

Slide make_slide(int u, int v, int w) { return Slide{Edge::of(u, v), Edge::of(v, w)}; }

Move inverse(const Move& m) {
  if (const auto* s = std::get_if<Slide>(&m)) return Slide{s->added, s->removed};
  return m;
}

std::vector<Move> reversed(std::span<const Move> moves) {
  std::vector<Move> out;
  out.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Mode Mode::kflip(int k) {
  if (k % 2 != 0) fail(ErrorCode::KOdd, "k = " + std::to_string(k));
  if (k < 4) fail(ErrorCode::KTooSmall, "k = " + std::to_string(k));
  return {Kind::KFlip, k};
}

bool Mode::allows(const Move& m) const {
  if (const auto* f = std::get_if<Flip>(&m)) {
    std::size_t want = kind == Kind::KFlip ? static_cast<std::size_t>(k) : 4;
    return f->cycle.size() == want;
  }
  return kind == Kind::FlipSlide;
}

std::string to_string(const Mode& mode) {
  switch (mode.kind) {
    case Mode::Kind::FlipOnly: return "flip";
    case Mode::Kind::FlipSlide: return "flip_slide";
    case Mode::Kind::KFlip: return "kflip(" + std::to_string(mode.k) + ")";
  }
  return "?";
}

std::string to_string(Verdict::Reason r) {
  switch (r) {
    case Verdict::Reason::None: return "None";
    case Verdict::Reason::InvalidMove: return "InvalidMove";
    case Verdict::Reason::ModeViolation: return "ModeViolation";
    case Verdict::Reason::FinalMismatch: return "FinalMismatch";
    case Verdict::Reason::SizeMismatch: return "SizeMismatch";
  }
  return "?";
}

namespace {

void apply_flip(const Graph& g, Matching& m, const Flip& f) {
  const auto& c = f.cycle;
  const std::size_t len = c.size();
  if (len < 4 || len % 2 != 0) fail(ErrorCode::InvalidFlip, "cycle length " + std::to_string(len));
  std::unordered_set<int> distinct;
  for (int v : c) {
    if (v < 0 || v >= g.n()) fail(ErrorCode::InvalidFlip, "vertex out of range");
    if (!distinct.insert(v).second) fail(ErrorCode::InvalidFlip, "repeated vertex " + std::to_string(v));
  }
  for (std::size_t i = 0; i < len; ++i) {
    int a = c[i], b = c[(i + 1) % len];
    if (!g.has_edge(a, b))
      fail(ErrorCode::InvalidFlip, "cycle edge {" + std::to_string(a) + "," + std::to_string(b) + "} absent");
  }
  auto all_matched = [&](std::size_t parity) {
    for (std::size_t i = parity; i < len; i += 2)
      if (!m.contains(c[i], c[(i + 1) % len])) return false;
    return true;
  };
  std::size_t from;
  if (all_matched(0)) from = 0;
  else if (all_matched(1)) from = 1;
  else fail(ErrorCode::InvalidFlip, "cycle is not alternating in the current matching");
  for (std::size_t i = from; i < len; i += 2) m.remove(c[i], c[(i + 1) % len]);
  for (std::size_t i = 1 - from; i < len; i += 2) m.add(c[i], c[(i + 1) % len]);
}

void apply_slide(const Graph& g, Matching& m, const Slide& s) {
  const Edge& r = s.removed;
  const Edge& a = s.added;
  if (!m.contains(r)) fail(ErrorCode::InvalidSlide, "removed edge not in matching");
  if (r == a) fail(ErrorCode::InvalidSlide, "removed and added edges coincide");
  bool shares = r.touches(a.u) || r.touches(a.v);
  if (!shares) fail(ErrorCode::InvalidSlide, "edges do not share a pivot");
  if (!g.has_edge(a.u, a.v)) fail(ErrorCode::InvalidSlide, "added edge not in graph");
  int pivot = s.pivot();
  int w = a.other(pivot);
  if (m.covers(w)) fail(ErrorCode::InvalidSlide, "far endpoint " + std::to_string(w) + " is matched");
  m.remove(r.u, r.v);
  m.add(a.u, a.v);
}

}  // namespace

void apply_move_inplace(const Graph& g, Matching& m, const Move& mv) {
  if (m.n() != g.n()) fail(ErrorCode::VertexOutOfRange, "matching and graph sizes differ");
  if (const auto* f = std::get_if<Flip>(&mv)) apply_flip(g, m, *f);
  else apply_slide(g, m, std::get<Slide>(mv));
}

Matching apply_move(const Graph& g, const Matching& m, const Move& mv) {
  Matching out = m;
  apply_move_inplace(g, out, mv);
  return out;
}

Verdict verify_sequence(const Graph& g, const Matching& m_ini, const ReconfigSequence& seq, const Matching& m_tar) {
  Verdict v;
  if (m_ini.size() != m_tar.size()) {
    v.accepted = false;
    v.step = seq.moves.size();
    v.reason = Verdict::Reason::SizeMismatch;
    v.detail = "initial and target matchings differ in size";
    return v;
  }
  Matching cur = m_ini;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    const Move& mv = seq.moves[i];
    if (!seq.mode.allows(mv)) {
      v.accepted = false;
      v.step = i;
      v.reason = Verdict::Reason::ModeViolation;
      v.detail = "move not permitted in mode " + to_string(seq.mode);
      return v;
    }
    try {
      apply_move_inplace(g, cur, mv);
    } catch (const Error& e) {
      v.accepted = false;
      v.step = i;
      v.reason = Verdict::Reason::InvalidMove;
      v.detail = e.what();
      return v;
    }
  }
  if (!(cur == m_tar)) {
    v.accepted = false;
    v.step = seq.moves.size();
    v.reason = Verdict::Reason::FinalMismatch;
    v.detail = "final matching differs from target";
  }
  return v;
}

std::optional<Move> move_between(const Matching& a, const Matching& b) {
  auto comps = symmetric_difference_components(a, b);
  if (comps.size() != 1) return std::nullopt;
  const DiffComponent& c = comps.front();
  if (c.kind == DiffComponent::Kind::EvenCycle) return make_flip(c.vertices);
  if (c.kind == DiffComponent::Kind::AlternatingPath && c.vertices.size() == 3) {
    int x = c.vertices[0], y = c.vertices[1], z = c.vertices[2];
    if (a.contains(x, y)) return make_slide(x, y, z);
    return make_slide(z, y, x);
  }
  return std::nullopt;
}

void SequenceBuilder::push(const Move& mv) {
  try {
    apply_move_inplace(*g_, current_, mv);
  } catch (const Error& e) {
    fail(ErrorCode::Internal, std::string("constructed move does not apply: ") + e.what());
  }
  moves_.push_back(mv);
}

}  // namespace matchflip
