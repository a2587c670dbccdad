#include "deligne/json_io.hpp"

#include <stdexcept>

namespace deligne {

namespace {

std::string sequence_label(const std::vector<int>& seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s + ")";
}

}  // namespace

Json param_to_json(ParamT t) {
    if (t.is_generic()) return "generic";
    return t.value();
}

ParamT param_from_json(const Json& j) {
    if (j.is_string()) return parse_param(j.get<std::string>());
    return ParamT::integer(j.get<int>());
}

Json diagram_to_json(const WeightDiagram& d) {
    Json j;
    j["t"] = param_to_json(d.t);
    j["family"] = family_name(d.family);
    j["window"] = {d.window.lo, d.window.hi};
    j["symbols"] = d.symbols();
    return j;
}

WeightDiagram diagram_from_json(const Json& j) {
    WeightDiagram d;
    d.t = param_from_json(j.at("t"));
    const auto family = j.at("family").get<std::string>();
    if (family == "d")
        d.family = Family::D;
    else if (family == "dprime")
        d.family = Family::Dprime;
    else
        throw std::invalid_argument("unknown diagram family: " + family);
    d.window = {j.at("window").at(0).get<int>(), j.at("window").at(1).get<int>()};
    const auto symbols = j.at("symbols").get<std::string>();
    if (static_cast<int>(symbols.size()) != d.window.width())
        throw std::invalid_argument("symbol string does not match window");
    for (char c : symbols) d.labels.push_back(symbol_from_char(c));
    d.left_tail = d.t.is_integer() ? Symbol::Cross : Symbol::Lt;
    d.right_tail = Symbol::Circ;
    return d;
}

Json matrix_to_json(const BipartitionMatrix& m, ParamT t) {
    Json j;
    j["t"] = param_to_json(t);
    j["N"] = m.bound();
    Json entries = Json::array();
    for (const auto& [r, row] : m.rows())
        for (const auto& [c, v] : row) entries.push_back({{"row", r.to_string()}, {"col", c.to_string()}, {"val", v}});
    j["entries"] = std::move(entries);
    return j;
}

BipartitionMatrix matrix_from_json(const Json& j) {
    BipartitionMatrix m(j.at("N").get<int>());
    for (const auto& e : j.at("entries"))
        m.set(parse_bipartition(e.at("row").get<std::string>()), parse_bipartition(e.at("col").get<std::string>()),
              e.at("val").get<std::int64_t>());
    return m;
}

Json eigen_to_json(const EigenLabel& e) {
    return {{"kind", e.kind == EigenLabel::Kind::Int ? "int" : "shifted"}, {"c", e.c}};
}

EigenLabel eigen_from_json(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    EigenLabel e;
    if (kind == "int")
        e.kind = EigenLabel::Kind::Int;
    else if (kind == "shifted")
        e.kind = EigenLabel::Kind::Shifted;
    else
        throw std::invalid_argument("unknown eigenvalue kind: " + kind);
    e.c = j.at("c").get<int>();
    return e;
}

Json vector_to_json(const AnyVector& v) {
    Json j = Json::object();
    std::visit(
        [&](const auto& x) {
            using V = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<V, WedgeVector>) {
                for (const auto& [seq, c] : x.terms.terms()) j[sequence_label(seq)] = c;
            } else if constexpr (std::is_same_v<V, TautVector>) {
                for (const auto& [i, c] : x.terms()) j["u" + std::to_string(i)] = c;
            } else {
                for (const auto& [k, c] : x.terms()) j[k.to_string()] = c;
            }
        },
        v);
    return j;
}

}  // namespace deligne
