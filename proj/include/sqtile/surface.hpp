#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqtile {

/// Horizontal edges are the a-family, vertical edges the b-family.
enum class Family : std::uint8_t { a, b };

/// Edge label of a square-tiled surface, e.g. a1 or b3.
struct GeneratorLabel {
  Family family = Family::a;
  int index = 1;

  auto operator<=>(const GeneratorLabel&) const = default;
  std::string to_string() const;
};

GeneratorLabel a(int index);
GeneratorLabel b(int index);

/// Parses "a1", "b4", ...; throws ParseError.
GeneratorLabel parse_label(std::string_view text);

/// One unit square, sides listed counter-clockwise from the bottom. Bottom and
/// top run left to right, left and right run bottom to top, so the boundary
/// relation of the square reads bottom·right = left·top.
struct Square {
  GeneratorLabel bottom;
  GeneratorLabel right;
  GeneratorLabel top;
  GeneratorLabel left;
};

using VertexId = int;

struct TopologyReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  int genus = 0;
};

/// Corner-orbit computation on raw squares. Throws MalformedComplex unless
/// every label is used exactly twice, once on each side of a horizontal pair
/// (bottom/top) or of a vertical pair (right/left).
TopologyReport validate_topology(std::span<const Square> squares);

struct Letter {
  GeneratorLabel label;
  int exponent = 1; ///< +1 or -1

  Letter inverse() const { return {label, -exponent}; }
  bool operator==(const Letter&) const = default;
};

/// A composable path in the edge groupoid of a square complex. Letters are
/// read left to right as path concatenation.
class TypedWord {
public:
  /// Empty path at a vertex.
  explicit TypedWord(VertexId vertex) : source_(vertex), target_(vertex) {}

  const std::vector<Letter>& letters() const { return letters_; }
  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  bool is_loop() const { return source_ == target_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  TypedWord inverse() const;

  /// Path concatenation; throws NonComposable unless target() == rhs.source().
  TypedWord operator*(const TypedWord& rhs) const;

  bool operator==(const TypedWord&) const = default;

  /// Dotted form, e.g. "a1.b2^-1"; the empty word prints as "1".
  std::string to_string() const;

private:
  friend class SquareComplex;
  friend TypedWord free_reduce(const TypedWord& w);
  TypedWord(std::vector<Letter> letters, VertexId source, VertexId target)
      : letters_(std::move(letters)), source_(source), target_(target) {}

  std::vector<Letter> letters_;
  VertexId source_;
  VertexId target_;
};

/// Removes adjacent cancelling pairs until none remain.
TypedWord free_reduce(const TypedWord& w);

/// A square-tiled surface with its corner-orbit vertex incidence.
class SquareComplex {
public:
  /// Throws MalformedComplex (see validate_topology).
  explicit SquareComplex(std::vector<Square> squares);

  const std::vector<Square>& squares() const { return squares_; }
  const std::vector<GeneratorLabel>& labels() const { return labels_; }
  const TopologyReport& topology() const { return topology_; }

  bool has_label(const GeneratorLabel& g) const;
  VertexId source(const GeneratorLabel& g) const;
  VertexId target(const GeneratorLabel& g) const;
  int vertex_count() const { return topology_.vertices; }
  /// "u", "v" for the first two vertices, "p<k>" beyond.
  static std::string vertex_name(VertexId v);

  /// Typed word from letters; throws NonComposable on a gap and
  /// std::invalid_argument on an unknown label or bad exponent.
  TypedWord word(const std::vector<Letter>& letters) const;
  TypedWord letter(const GeneratorLabel& g, int exponent = 1) const;
  TypedWord empty_word(VertexId v) const { return TypedWord(v); }

  /// Parses "a1.b2^-1 a3" style text. Powers "^n" expand to |n| letters.
  /// An empty text needs an explicit vertex. Throws ParseError.
  TypedWord parse(std::string_view text, std::optional<VertexId> empty_at = std::nullopt) const;

  /// The four boundary relation loops bottom·right·top^-1·left^-1.
  std::vector<TypedWord> relation_words() const;

  /// One square per line: "bottom right top left".
  std::string to_table() const;
  static SquareComplex from_table(std::string_view text);

private:
  std::vector<Square> squares_;
  std::vector<GeneratorLabel> labels_;
  std::vector<VertexId> source_;
  std::vector<VertexId> target_;
  TopologyReport topology_;

  std::size_t slot(const GeneratorLabel& g) const;
};

/// The four-square genus-two surface S'.
SquareComplex build_s_prime();

/// Process-wide instance of build_s_prime().
const SquareComplex& s_prime();

inline constexpr VertexId kU = 0; ///< base point: source of a1
inline constexpr VertexId kV = 1;

/// Shorthand for s_prime().parse(text, empty_at).
TypedWord parse_word(std::string_view text, std::optional<VertexId> empty_at = std::nullopt);

} // namespace sqtile
