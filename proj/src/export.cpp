#include "spm/export.hpp"

#include <sstream>

#include <json.hpp>

#include "spm/errors.hpp"

namespace spm {

namespace {

using ordered_json = nlohmann::ordered_json;

// Offset added to a stored label to present it in `shown` coordinates.
int label_shift(Coords stored, Coords shown) {
  if (stored == shown) return 0;
  return shown == Coords::infinite ? 1 : -1;
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw Error("unknown format '" + std::string(name) + "' (expected dot or json)");
}

Coords parse_coords(std::string_view name) {
  if (name == "finite") return Coords::finite;
  if (name == "infinite") return Coords::infinite;
  throw Error("unknown coordinates '" + std::string(name) + "' (expected finite or infinite)");
}

const char* to_string(Coords c) noexcept { return c == Coords::finite ? "finite" : "infinite"; }

std::string node_label(const Partition& stored, Coords, Coords shown) {
  // Stored tails and finite piles coincide under chi, so only the marker differs.
  if (shown == Coords::finite) return to_string(stored);
  return stored.empty() ? std::string("~") : "~," + to_string(stored);
}

std::string to_dot(const Diagram& d, std::optional<Coords> shown) {
  const Coords view = shown.value_or(d.coords());
  const int shift = label_shift(d.coords(), view);
  std::ostringstream os;
  os << "digraph SPM {\n";
  for (NodeId v = 0; v < d.size(); ++v) {
    os << "  p_" << v << " [label=\"" << node_label(d.node(v), d.coords(), view) << "\"];\n";
  }
  for (const Edge& e : d.edges()) {
    os << "  p_" << e.source << " -> p_" << e.target << " [label=\"" << e.label + shift << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const Diagram& d, std::optional<Coords> shown) {
  const Coords view = shown.value_or(d.coords());
  const int shift = label_shift(d.coords(), view);
  ordered_json j;
  j["kind"] = d.kind() == DiagramKind::single ? "single" : "upto";
  j["n"] = d.n();
  if (d.kind() == DiagramKind::upto || view == Coords::infinite) j["coords"] = to_string(view);
  ordered_json nodes = ordered_json::array();
  for (const Partition& s : d.nodes()) nodes.push_back(s.vec());
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const Edge& e : d.edges()) edges.push_back({e.source, e.label + shift, e.target});
  j["edges"] = std::move(edges);
  return j.dump();
}

Diagram diagram_from_json(std::string_view text, Budget budget) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("invalid diagram json: ") + ex.what());
  }
  try {
    const std::string kind_name = j.at("kind").get<std::string>();
    DiagramKind kind;
    if (kind_name == "single") {
      kind = DiagramKind::single;
    } else if (kind_name == "upto") {
      kind = DiagramKind::upto;
    } else {
      throw Error("unknown diagram kind '" + kind_name + "'");
    }
    const Coords stored = kind == DiagramKind::single ? Coords::finite : Coords::infinite;
    const Coords view = j.contains("coords") ? parse_coords(j.at("coords").get<std::string>()) : stored;
    const int shift = label_shift(view, stored);

    Diagram d(kind, j.at("n").get<int>(), stored, budget);
    for (const auto& node : j.at("nodes")) d.intern(Partition(node.get<std::vector<int>>()));
    for (const auto& edge : j.at("edges")) {
      auto source = edge.at(0).get<NodeId>();
      auto target = edge.at(2).get<NodeId>();
      if (source >= d.size() || target >= d.size()) throw Error("edge endpoint out of range");
      d.add_edge(source, edge.at(1).get<int>() + shift, target);
    }
    d.finalize();
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed diagram json: ") + ex.what());
  }
}

void write(std::ostream& os, const Diagram& d, ExportFormat format, std::optional<Coords> shown) {
  if (format == ExportFormat::dot) {
    os << to_dot(d, shown);
  } else {
    os << to_json(d, shown) << '\n';
  }
  if (!os) throw Error("failed to write diagram");
}

}  // namespace spm
