#include "arcoalg/arquiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

namespace arcoalg::ar {

void ARQuiver::add_node(Node n) {
    if (index_.contains(n.id)) return;
    index_.emplace(n.id, nodes_.size());
    nodes_.push_back(std::move(n));
}

void ARQuiver::add_arrow(const std::string& source, const std::string& target) {
    if (!contains(source) || !contains(target)) return;
    Edge e{source, target};
    if (std::find(arrows_.begin(), arrows_.end(), e) != arrows_.end()) return;
    arrows_.push_back(std::move(e));
}

void ARQuiver::set_translation(const std::string& node, const std::string& translate) {
    if (!contains(node) || !contains(translate)) return;
    for (auto& e : translation_)
        if (e.source == node) {
            e.target = translate;
            return;
        }
    translation_.push_back({node, translate});
}

std::optional<std::string> ARQuiver::translate(const std::string& id) const {
    for (const auto& e : translation_)
        if (e.source == id) return e.target;
    return std::nullopt;
}

std::vector<std::string> ARQuiver::targets_of(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& e : arrows_)
        if (e.source == id) out.push_back(e.target);
    return out;
}

std::vector<std::string> ARQuiver::sources_of(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& e : arrows_)
        if (e.target == id) out.push_back(e.source);
    return out;
}

ARQuiver stable(const ARQuiver& q) {
    ARQuiver out;
    for (const auto& n : q.nodes())
        if (!n.injective) out.add_node(n);
    for (const auto& e : q.arrows()) out.add_arrow(e.source, e.target);
    for (const auto& e : q.translation()) out.set_translation(e.source, e.target);
    return out;
}

std::vector<MeshViolation> mesh_lint(const ARQuiver& q) {
    std::vector<MeshViolation> out;
    for (const auto& e : q.translation()) {
        if (q.node(e.source).incomplete || q.node(e.target).incomplete) continue;
        auto outs = q.targets_of(e.source);
        auto ins = q.sources_of(e.target);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        if (outs != ins) out.push_back({e.source, e.target, std::move(outs), std::move(ins)});
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string to_dot(const ARQuiver& q, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << quoted(name) << " {\n";
    os << "  node [shape=box];\n";
    for (const auto& n : q.nodes()) {
        os << "  " << quoted(n.id) << " [label=" << quoted(n.label);
        if (n.injective) os << ", peripheries=2";
        if (n.incomplete) os << ", style=dotted";
        os << "];\n";
    }
    for (const auto& e : q.arrows()) os << "  " << quoted(e.source) << " -> " << quoted(e.target) << ";\n";
    for (const auto& e : q.translation())
        os << "  " << quoted(e.source) << " -> " << quoted(e.target) << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const ARQuiver& q) {
    using nlohmann::ordered_json;
    ordered_json nodes = ordered_json::array();
    for (const auto& n : q.nodes())
        nodes.push_back({{"id", n.id},
                         {"label", n.label},
                         {"dim", n.dim},
                         {"injective", n.injective},
                         {"incomplete", n.incomplete},
                         {"row", n.row},
                         {"col", n.col},
                         {"component", n.component}});
    auto edges = [](const std::vector<Edge>& es) {
        ordered_json a = ordered_json::array();
        for (const auto& e : es) a.push_back({{"source", e.source}, {"target", e.target}});
        return a;
    };
    ordered_json j;
    j["nodes"] = std::move(nodes);
    j["arrows"] = edges(q.arrows());
    j["translation"] = edges(q.translation());
    return j.dump(2) + "\n";
}

namespace {

void rstrip(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

void render_component(const ARQuiver& q, int component, std::size_t width, std::ostream& os) {
    std::vector<const Node*> nodes;
    for (const auto& n : q.nodes())
        if (n.component == component) nodes.push_back(&n);
    int min_col = nodes.front()->col, max_col = min_col, min_row = nodes.front()->row, max_row = min_row;
    for (const Node* n : nodes) {
        min_col = std::min(min_col, n->col);
        max_col = std::max(max_col, n->col);
        min_row = std::min(min_row, n->row);
        max_row = std::max(max_row, n->row);
    }
    const std::size_t cols = static_cast<std::size_t>(max_col - min_col + 1);
    const std::size_t rows = static_cast<std::size_t>(max_row - min_row + 1);
    std::vector<std::string> lines(2 * rows - 1, std::string(cols * width, ' '));
    std::map<std::pair<int, int>, const Node*> at;
    for (const Node* n : nodes) at[{n->row, n->col}] = n;
    auto x_of = [&](int col) { return static_cast<std::size_t>(col - min_col) * width; };
    auto y_of = [&](int row) { return static_cast<std::size_t>(row - min_row) * 2; };

    for (const Node* n : nodes) lines[y_of(n->row)].replace(x_of(n->col), n->label.size(), n->label);
    for (const auto& e : q.arrows()) {
        const Node& s = q.node(e.source);
        const Node& t = q.node(e.target);
        if (s.component != component || t.component != component) continue;
        const int left = std::min(s.col, t.col);
        if (s.row == t.row) {
            lines[y_of(s.row)][x_of(left) + width - 1] = s.col < t.col ? '>' : '<';
            continue;
        }
        if (std::abs(s.row - t.row) != 1 || std::abs(s.col - t.col) != 1) continue;
        const Node& upper = s.row < t.row ? s : t;
        char& c = lines[y_of(upper.row) + 1][x_of(left) + width / 2];
        const char mark = upper.col == left ? '\\' : '/';
        c = (c == ' ' || c == mark) ? mark : 'X';
    }
    for (const auto& e : q.translation()) {
        const Node& s = q.node(e.source);
        const Node& t = q.node(e.target);
        if (s.component != component || s.row != t.row || std::abs(s.col - t.col) != 2) continue;
        const int mid = (s.col + t.col) / 2;
        if (at.contains({s.row, mid})) continue;
        const std::string mark = s.col < t.col ? "..>" : "<..";
        lines[y_of(s.row)].replace(x_of(mid), mark.size(), mark);
    }
    for (auto& l : lines) {
        rstrip(l);
        os << l << '\n';
    }
}

}  // namespace

std::string to_ascii(const ARQuiver& q) {
    std::ostringstream os;
    if (q.nodes().empty()) return "";
    std::size_t width = 0;
    std::set<int> components;
    for (const auto& n : q.nodes()) {
        width = std::max(width, n.label.size());
        components.insert(n.component);
    }
    width = std::max<std::size_t>(width + 2, 5);
    bool first = true;
    for (int c : components) {
        if (!first) os << '\n';
        first = false;
        if (components.size() > 1) os << "component " << c << ":\n";
        render_component(q, c, width, os);
    }
    return os.str();
}

}  // namespace arcoalg::ar
