#include "gig/dot.hpp"

#include <sstream>

namespace gig {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const ParseGraph& g, const std::string& name, std::optional<NodeId> highlight) {
  std::ostringstream os;
  os << "digraph \"" << escape(name) << "\" {\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  for (NodeId n : g.nodes()) {
    os << "  " << n << " [";
    switch (g.kind(n)) {
      case NodeKind::lexeme:
        os << "shape=box, label=\"" << escape(g.label(n).name) << "\"";
        break;
      case NodeKind::epsilon:
        os << "shape=point, label=\"\"";
        break;
      case NodeKind::nonlexical:
        os << "shape=ellipse, label=\"" << escape(g.label(n).name) << "\"";
        break;
    }
    if (highlight == n) os << ", style=bold";
    os << "];\n";
  }
  for (const Edge& e : g.first_child_edges())
    os << "  " << e.from << " -> " << e.to << " [label=\"E\", style=solid];\n";
  for (const Edge& e : g.right_sibling_edges())
    os << "  " << e.from << " -> " << e.to << " [label=\"F\", style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace gig
