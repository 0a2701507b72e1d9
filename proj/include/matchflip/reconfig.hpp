#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"

namespace matchflip {

/// Exchange along an alternating cycle. Four vertices for an ordinary flip,
/// k vertices in k-flip mode. Stored canonically: smallest vertex first, then
/// the smaller of its two cycle neighbours.
struct Flip {
  std::vector<int> cycle;

  friend bool operator==(const Flip&, const Flip&) = default;
};

/// Replace `removed` by the incident edge `added`; they share the pivot.
struct Slide {
  Edge removed;
  Edge added;

  int pivot() const { return removed.touches(added.u) ? added.u : added.v; }

  friend bool operator==(const Slide&, const Slide&) = default;
};

using Move = std::variant<Flip, Slide>;

Flip make_flip(std::vector<int> cycle);
inline Flip make_flip(int a, int b, int c, int d) { return make_flip(std::vector<int>{a, b, c, d}); }
/// Slide uv -> vw (pivot v).
Slide make_slide(int u, int v, int w);

/// The move undoing `m` (flips are involutions).
Move inverse(const Move& m);

/// Reverses a move list and inverts each move: the sequence that walks back.
std::vector<Move> reversed(std::span<const Move> moves);

struct Mode {
  enum class Kind { FlipOnly, FlipSlide, KFlip };
  Kind kind = Kind::FlipOnly;
  int k = 4;

  static Mode flip() { return {Kind::FlipOnly, 4}; }
  static Mode flip_slide() { return {Kind::FlipSlide, 4}; }
  /// Throws KOdd / KTooSmall.
  static Mode kflip(int k);

  bool allows(const Move& m) const;

  friend bool operator==(const Mode&, const Mode&) = default;
};

std::string to_string(const Mode& mode);

struct ReconfigSequence {
  Mode mode;
  std::vector<Move> moves;
};

/// Applies a move, throwing InvalidFlip / InvalidSlide when it does not fit
/// (g, m).
Matching apply_move(const Graph& g, const Matching& m, const Move& mv);
void apply_move_inplace(const Graph& g, Matching& m, const Move& mv);

struct Verdict {
  enum class Reason { None, InvalidMove, ModeViolation, FinalMismatch, SizeMismatch };
  bool accepted = true;
  /// Offending move index; moves.size() when the failure is at the end.
  std::size_t step = 0;
  Reason reason = Reason::None;
  std::string detail;
};

std::string to_string(Verdict::Reason r);

/// Replays `seq` from m_ini and compares against m_tar. Never throws for a
/// bad sequence; the verdict carries the failing step.
Verdict verify_sequence(const Graph& g, const Matching& m_ini, const ReconfigSequence& seq, const Matching& m_tar);

/// The single move turning a into b, if their difference is one alternating
/// cycle (Flip) or a two-edge alternating path (Slide).
std::optional<Move> move_between(const Matching& a, const Matching& b);

/// Mutable cursor used by the constructive solvers: every recorded move is
/// validated against the current matching as it is appended.
class SequenceBuilder {
 public:
  SequenceBuilder(const Graph& g, Matching start) : g_(&g), current_(std::move(start)) {}

  void flip(int a, int b, int c, int d) { push(make_flip(a, b, c, d)); }
  /// Slide uv -> vw.
  void slide(int u, int v, int w) { push(make_slide(u, v, w)); }
  void push(const Move& mv);
  void append(std::span<const Move> moves) {
    for (const Move& mv : moves) push(mv);
  }

  const Matching& current() const { return current_; }
  const std::vector<Move>& moves() const { return moves_; }
  std::vector<Move> take_moves() { return std::move(moves_); }

 private:
  const Graph* g_;
  Matching current_;
  std::vector<Move> moves_;
};

}  // namespace matchflip
