#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gig/label.hpp"

namespace gig {

/// Node identity, unique within one graph and never reused.
enum class NodeId : std::uint32_t {};

constexpr std::uint32_t index_of(NodeId id) noexcept { return static_cast<std::uint32_t>(id); }
std::ostream& operator<<(std::ostream& os, NodeId id);

/// Nonlexical nodes carry variables, lexemes carry symbols, and an ε-leaf is
/// the unlabeled single child of a node that derived the empty string.
enum class NodeKind { nonlexical, lexeme, epsilon };

struct Edge {
  NodeId from;
  NodeId to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A tree encoded with first-child (E) and right-sibling (F) edges.
///
/// The class is a plain value: it records whatever nodes and edges it is given,
/// including shapes that break the parse-graph constraints, so that `validate`
/// can report them. Lookups (`first_child`, `parent`, ...) return the first
/// recorded edge; they are only meaningful on graphs that validate.
class ParseGraph {
 public:
  ParseGraph() = default;

  /// Single nonlexical node, which becomes the root.
  explicit ParseGraph(const std::string& root_variable);

  NodeId add_node(Label label);
  NodeId add_variable(const std::string& name) { return add_node(Label::variable(name)); }
  NodeId add_lexeme(const std::string& symbol);
  NodeId add_epsilon();
  /// Inserts a node under a caller-chosen id, which must not exist yet.
  NodeId insert(NodeId id, NodeKind kind, Label label);

  void add_first_child(NodeId parent, NodeId child);
  void add_right_sibling(NodeId left, NodeId right);
  void set_root(NodeId root);
  /// Raises the id counter so that ids below `next` are never handed out.
  void reserve_ids(std::uint32_t next);

  bool has_root() const noexcept { return root_.has_value(); }
  NodeId root() const;
  bool contains(NodeId id) const noexcept;
  NodeKind kind(NodeId id) const;
  const Label& label(NodeId id) const;
  bool is_variable_node(NodeId id) const { return kind(id) == NodeKind::nonlexical; }
  bool is_lexeme(NodeId id) const { return kind(id) == NodeKind::lexeme; }
  bool is_epsilon(NodeId id) const { return kind(id) == NodeKind::epsilon; }

  std::optional<NodeId> first_child(NodeId id) const;    // E(n)
  std::optional<NodeId> right_sibling(NodeId id) const;  // F(n)
  std::optional<NodeId> parent(NodeId id) const;         // E⁻¹(n)
  std::optional<NodeId> left_sibling(NodeId id) const;   // F⁻¹(n)
  /// Immediate dominator by E ∪ F.
  std::optional<NodeId> dominator(NodeId id) const;

  /// Children in order: E(n) followed by its F-chain.
  std::vector<NodeId> children(NodeId id) const;

  /// All nodes, ascending by id.
  std::vector<NodeId> nodes() const;
  std::vector<NodeId> nodes_of_kind(NodeKind kind) const;
  std::size_t size() const noexcept { return size_; }
  std::uint32_t next_id() const noexcept { return static_cast<std::uint32_t>(slots_.size()); }

  std::span<const Edge> first_child_edges() const noexcept { return e_edges_; }
  std::span<const Edge> right_sibling_edges() const noexcept { return f_edges_; }

  /// Structural identity including node ids.
  friend bool operator==(const ParseGraph& a, const ParseGraph& b);

 private:
  struct Slot {
    bool present = false;
    NodeKind kind = NodeKind::nonlexical;
    Label label;
    std::optional<NodeId> first_child;
    std::optional<NodeId> right_sibling;
    std::optional<NodeId> parent;
    std::optional<NodeId> left_sibling;
  };

  const Slot& slot(NodeId id) const;
  Slot& slot(NodeId id);

  std::vector<Slot> slots_;
  std::size_t size_ = 0;
  std::optional<NodeId> root_;
  std::vector<Edge> e_edges_;
  std::vector<Edge> f_edges_;
};

/// One broken parse-graph constraint.
struct Violation {
  std::optional<NodeId> node;
  std::string constraint;
};

std::ostream& operator<<(std::ostream& os, const Violation& v);

/// Empty result means the graph is a well-formed parse graph.
std::vector<Violation> validate(const ParseGraph& g);
inline bool is_valid(const ParseGraph& g) { return validate(g).empty(); }

}  // namespace gig
