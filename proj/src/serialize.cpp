#include "arcoalg/serialize.hpp"

namespace arcoalg::io {

Json to_json(const lin::Matrix& m) {
    Json entries = Json::array();
    for (const auto& x : m.entries()) entries.push_back(lin::to_string(x));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

lin::Matrix matrix_from_json(const Json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) throw ContractViolation("matrix entry count does not match its shape");
    lin::Matrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m(k / cols, k % cols) = lin::parse_rational(entries[k].get<std::string>());
    return m;
}

Json to_json(const rep::Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"arrow_id", a.id}, {"source", a.source}, {"target", a.target}, {"label", a.label}});
    return Json{{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

Json to_json(const rep::Relation& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"coefficient", lin::to_string(t.coefficient)}, {"path", t.path}});
    return Json{{"source", r.source}, {"target", r.target}, {"terms", std::move(terms)}};
}

Json to_json(const rep::AlgebraPresentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relations()) rels.push_back(to_json(r));
    return Json{{"quiver", to_json(p.quiver())}, {"relations", std::move(rels)}, {"nilpotency_bound", p.nilpotency_bound()}};
}

Json to_json(const rep::Representation& m) {
    const auto& q = m.quiver();
    Json dim = Json::object();
    for (std::size_t i = 0; i < q.vertices().size(); ++i) dim[std::to_string(q.vertices()[i])] = m.dim_at(i);
    Json action = Json::object();
    for (std::size_t i = 0; i < q.arrows().size(); ++i) action[std::to_string(q.arrows()[i].id)] = to_json(m.actions()[i]);
    return Json{{"presentation", m.presentation()->name()}, {"dim", std::move(dim)}, {"action", std::move(action)}};
}

Json to_json(const rep::Morphism& f) {
    const auto& q = f.source().quiver();
    Json blocks = Json::object();
    for (std::size_t i = 0; i < q.vertices().size(); ++i) blocks[std::to_string(q.vertices()[i])] = to_json(f.blocks()[i]);
    return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"blocks", std::move(blocks)}};
}

Json to_json(const rep::ShortExactSeq& s) {
    return Json{{"left", to_json(s.left)},   {"middle", to_json(s.middle)}, {"right", to_json(s.right)},
                {"inj", to_json(s.inj)},     {"surj", to_json(s.surj)},     {"non_split", s.non_split}};
}

rep::Representation representation_from_json(const Json& j, rep::PresentationPtr pres) {
    const auto& q = pres->quiver();
    std::vector<int> dims;
    for (auto v : q.vertices()) dims.push_back(j.at("dim").at(std::to_string(v)).get<int>());
    std::vector<lin::Matrix> acts;
    for (const auto& a : q.arrows()) acts.push_back(matrix_from_json(j.at("action").at(std::to_string(a.id))));
    return rep::Representation(std::move(pres), std::move(dims), std::move(acts));
}

}  // namespace arcoalg::io
