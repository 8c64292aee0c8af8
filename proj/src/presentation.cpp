#include "arcoalg/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace arcoalg::rep {

Quiver::Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw ContractViolation("duplicate vertex id " + std::to_string(vertices_[i]));
        out_[vertices_[i]];
        in_[vertices_[i]];
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (!has_vertex(a.source) || !has_vertex(a.target))
            throw ContractViolation("arrow " + std::to_string(a.id) + " has an undeclared endpoint");
        if (!arrow_index_.emplace(a.id, i).second)
            throw ContractViolation("duplicate arrow id " + std::to_string(a.id));
        out_[a.source].push_back(a.id);
        in_[a.target].push_back(a.id);
    }
}

std::size_t Quiver::vertex_index(VertexId v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw ContractViolation("unknown vertex " + std::to_string(v));
    return it->second;
}

std::size_t Quiver::arrow_index(ArrowId a) const {
    auto it = arrow_index_.find(a);
    if (it == arrow_index_.end()) throw ContractViolation("unknown arrow " + std::to_string(a));
    return it->second;
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev;
    rev.reserve(arrows_.size());
    for (const auto& a : arrows_) {
        std::string label = a.label;
        const std::string suffix = "^op";
        if (label.size() >= suffix.size() && label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0)
            label.resize(label.size() - suffix.size());
        else
            label += suffix;
        rev.push_back({a.id, a.target, a.source, label});
    }
    return Quiver(vertices_, std::move(rev));
}

VertexId walk(const Quiver& q, VertexId s, const Path& p) {
    VertexId at = s;
    if (!q.has_vertex(s)) throw ContractViolation("unknown vertex " + std::to_string(s));
    for (ArrowId id : p) {
        const Arrow& a = q.arrow(id);
        if (a.source != at) throw ContractViolation("path is not composable");
        at = a.target;
    }
    return at;
}

PresentationPtr AlgebraPresentation::make(Quiver quiver, std::vector<Relation> relations, int nilpotency_bound,
                                          std::optional<std::set<VertexId>> complete_projectives,
                                          std::optional<std::set<VertexId>> complete_injectives, std::string name) {
    if (nilpotency_bound < 1) throw ContractViolation("nilpotency bound must be positive");
    std::shared_ptr<AlgebraPresentation> p(new AlgebraPresentation());
    p->quiver_ = std::move(quiver);
    p->relations_ = std::move(relations);
    p->bound_ = nilpotency_bound;
    p->name_ = std::move(name);
    const std::set<VertexId> all(p->quiver_.vertices().begin(), p->quiver_.vertices().end());
    p->complete_proj_ = complete_projectives.value_or(all);
    p->complete_inj_ = complete_injectives.value_or(all);
    for (VertexId v : p->complete_proj_)
        if (!all.contains(v)) throw ContractViolation("complete projective at unknown vertex");
    for (VertexId v : p->complete_inj_)
        if (!all.contains(v)) throw ContractViolation("complete injective at unknown vertex");
    p->build();
    return p;
}

namespace {

bool path_less(const Path& a, const Path& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

void AlgebraPresentation::build() {
    for (const auto& rel : relations_) {
        if (rel.terms.empty()) throw ContractViolation("relation without terms");
        for (const auto& t : rel.terms) {
            if (sgn(t.coefficient) == 0) throw ContractViolation("relation term with zero coefficient");
            if (walk(quiver_, rel.source, t.path) != rel.target)
                throw ContractViolation("relation terms do not share source and target");
        }
    }

    // every path of length < bound, grouped by endpoints
    std::map<std::pair<VertexId, VertexId>, std::vector<Path>> paths;
    std::vector<std::pair<VertexId, Path>> frontier;
    for (VertexId v : quiver_.vertices()) frontier.push_back({v, {}});
    for (int len = 0; len < bound_ && !frontier.empty(); ++len) {
        std::vector<std::pair<VertexId, Path>> next;
        for (const auto& [s, p] : frontier) {
            const VertexId t = walk(quiver_, s, p);
            paths[{s, t}].push_back(p);
            for (ArrowId a : quiver_.out_arrows(t)) {
                Path q = p;
                q.push_back(a);
                next.push_back({s, std::move(q)});
            }
        }
        frontier = std::move(next);
    }
    for (auto& [key, list] : paths) std::sort(list.begin(), list.end(), path_less);

    std::map<VertexId, std::vector<Path>> ending_at, starting_at;
    for (const auto& [key, list] : paths)
        for (const auto& p : list) {
            starting_at[key.first].push_back(p);
            ending_at[key.second].push_back(p);
        }
    auto source_of = [&](const Path& p, VertexId fallback) {
        return p.empty() ? fallback : quiver_.arrow(p.front()).source;
    };

    // ideal elements u * rel * w, truncated at the bound, grouped by endpoints
    std::map<std::pair<VertexId, VertexId>, std::vector<std::map<Path, Rational>>> ideal;
    for (const auto& rel : relations_) {
        for (const auto& pre : ending_at[rel.source]) {
            const VertexId s = source_of(pre, rel.source);
            for (const auto& post : starting_at[rel.target]) {
                const VertexId t = walk(quiver_, rel.target, post);
                std::map<Path, Rational> element;
                for (const auto& term : rel.terms) {
                    Path full = pre;
                    full.insert(full.end(), term.path.begin(), term.path.end());
                    full.insert(full.end(), post.begin(), post.end());
                    if (static_cast<int>(full.size()) >= bound_) continue;
                    element[full] += term.coefficient;
                }
                std::erase_if(element, [](const auto& kv) { return sgn(kv.second) == 0; });
                if (!element.empty()) ideal[{s, t}].push_back(std::move(element));
            }
        }
    }

    // Per endpoint pair: columns are paths in descending order, so pivots
    // eliminate the largest paths and the survivors are the smallest ones.
    struct Pending {
        VertexId s;
        Path path;
        std::vector<std::pair<Path, Rational>> expansion;  // in surviving paths
    };
    std::vector<Pending> pending;
    for (const auto& [key, list] : paths) {
        const std::size_t m = list.size();
        std::vector<Path> cols(list.rbegin(), list.rend());
        std::map<Path, std::size_t> col_of;
        for (std::size_t c = 0; c < m; ++c) col_of[cols[c]] = c;
        const auto& gens = ideal[key];
        Matrix g(gens.size(), m);
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (const auto& [p, c] : gens[r]) g(r, col_of.at(p)) = c;
        const lin::Rref red = lin::rref(g);
        std::vector<bool> pivot(m, false);
        for (auto pc : red.pivot_cols) pivot[pc] = true;
        for (std::size_t c = 0; c < m; ++c)
            if (!pivot[c]) pending.push_back({key.first, cols[c], {{cols[c], Rational(1)}}});
        for (std::size_t row = 0; row < red.rank; ++row) {
            Pending pe{key.first, cols[red.pivot_cols[row]], {}};
            for (std::size_t c = 0; c < m; ++c)
                if (!pivot[c] && sgn(red.reduced(row, c)) != 0) pe.expansion.push_back({cols[c], -red.reduced(row, c)});
            pending.push_back(std::move(pe));
        }
    }

    for (const auto& pe : pending)
        if (pe.expansion.size() == 1 && pe.expansion[0].first == pe.path && pe.expansion[0].second == 1)
            basis_.push_back({pe.s, walk(quiver_, pe.s, pe.path), pe.path});
    std::sort(basis_.begin(), basis_.end(), [](const PathClass& a, const PathClass& b) {
        if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
        if (a.path != b.path) return a.path < b.path;
        return a.source < b.source;
    });
    std::map<std::pair<VertexId, Path>, std::size_t> index;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        index[{basis_[i].source, basis_[i].path}] = i;
        between_[{basis_[i].source, basis_[i].target}].push_back(i);
        if (basis_[i].path.empty()) idempotent_[basis_[i].source] = i;
    }
    for (const auto& pe : pending) {
        Combination c;
        for (const auto& [p, coeff] : pe.expansion) c.push_back({index.at({pe.s, p}), coeff});
        std::sort(c.begin(), c.end());
        normal_form_[{pe.s, pe.path}] = std::move(c);
    }
    for (VertexId v : quiver_.vertices())
        if (!idempotent_.contains(v)) throw ContractViolation("relations kill the idempotent at a vertex");

    std::ostringstream fp;
    fp << "V";
    for (VertexId v : quiver_.vertices()) fp << ' ' << v;
    fp << "|A";
    for (const auto& a : quiver_.arrows()) fp << ' ' << a.id << ':' << a.source << '>' << a.target << ':' << a.label;
    fp << "|R";
    for (const auto& rel : relations_) {
        fp << " {" << rel.source << '>' << rel.target;
        for (const auto& t : rel.terms) {
            fp << ' ' << t.coefficient.get_str() << '*';
            for (ArrowId a : t.path) fp << a << '.';
        }
        fp << '}';
    }
    fp << "|N " << bound_ << "|P";
    for (VertexId v : complete_proj_) fp << ' ' << v;
    fp << "|I";
    for (VertexId v : complete_inj_) fp << ' ' << v;
    fingerprint_ = fp.str();
}

const std::vector<std::size_t>& AlgebraPresentation::classes_between(VertexId s, VertexId t) const {
    static const std::vector<std::size_t> none;
    auto it = between_.find({s, t});
    return it == between_.end() ? none : it->second;
}

std::size_t AlgebraPresentation::idempotent(VertexId v) const {
    auto it = idempotent_.find(v);
    if (it == idempotent_.end()) throw ContractViolation("unknown vertex " + std::to_string(v));
    return it->second;
}

Combination AlgebraPresentation::reduce(VertexId s, const Path& p) const {
    walk(quiver_, s, p);
    if (static_cast<int>(p.size()) >= bound_) return {};
    return normal_form_.at({s, p});
}

Combination AlgebraPresentation::multiply(std::size_t x, std::size_t y) const {
    const PathClass& a = basis_.at(x);
    const PathClass& b = basis_.at(y);
    if (a.target != b.source) return {};
    Path p = a.path;
    p.insert(p.end(), b.path.begin(), b.path.end());
    return reduce(a.source, p);
}

bool AlgebraPresentation::projective_complete(VertexId v) const { return complete_proj_.contains(v); }
bool AlgebraPresentation::injective_complete(VertexId v) const { return complete_inj_.contains(v); }

PresentationPtr AlgebraPresentation::opposite() const {
    if (auto back = opposite_of_.lock()) return back;
    std::call_once(opposite_once_, [this] {
        std::vector<Relation> rels;
        for (const auto& rel : relations_) {
            Relation r{rel.target, rel.source, {}};
            for (const auto& t : rel.terms) r.terms.push_back({t.coefficient, Path(t.path.rbegin(), t.path.rend())});
            rels.push_back(std::move(r));
        }
        std::shared_ptr<AlgebraPresentation> p(new AlgebraPresentation());
        p->quiver_ = quiver_.opposite();
        p->relations_ = std::move(rels);
        p->bound_ = bound_;
        p->name_ = name_.empty() ? std::string{} : name_ + "^op";
        p->complete_proj_ = complete_inj_;
        p->complete_inj_ = complete_proj_;
        p->opposite_of_ = weak_from_this();
        p->build();
        opposite_ = std::move(p);
    });
    return opposite_;
}

bool same_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    return &a == &b || a.fingerprint() == b.fingerprint();
}

}  // namespace arcoalg::rep
