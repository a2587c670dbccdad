#include "deligne/grothendieck.hpp"

#include <algorithm>

#include "deligne/caps.hpp"
#include "deligne/lr.hpp"

namespace deligne {

namespace {

void require_nonnegative(const BipartitionMatrix& m, const char* what) {
    for (const auto& [r, row] : m.rows())
        for (const auto& [c, v] : row)
            if (v < 0)
                throw InconsistencyError(std::string(what) + ": negative entry " + std::to_string(v) + " at (" +
                                         r.to_string() + ", " + c.to_string() + ")");
}

BipartitionMatrix box_moves(FunctorIndex a, ParamT t, int max_size, BoxMove black, BoxMove white) {
    const BoxSelection sel = select_boxes(a, t);
    BipartitionMatrix m(max_size);
    for (const auto& lambda : bipartitions_up_to(max_size)) {
        if (sel.black)
            for (const auto& mu : bipartition_neighbors(lambda, sel.black, black)) m.add(lambda, mu, 1);
        if (sel.white)
            for (const auto& mu : bipartition_neighbors(lambda, sel.white, white)) m.add(lambda, mu, 1);
    }
    return m;
}

}  // namespace

std::string FunctorIndex::to_string() const {
    switch (family) {
        case IndexFamily::Integer:
            return "int:" + std::to_string(c);
        case IndexFamily::Shifted:
            return "shifted:" + std::to_string(c);
        case IndexFamily::Untagged:
            break;
    }
    return std::to_string(c);
}

BoxSelection select_boxes(FunctorIndex a, ParamT t) {
    if (t.is_generic()) {
        switch (a.family) {
            case IndexFamily::Integer:
                return {a.c, std::nullopt};
            case IndexFamily::Shifted:
                return {std::nullopt, -a.c};
            case IndexFamily::Untagged:
                throw std::invalid_argument("generic t needs an index tagged int or shifted");
        }
    }
    const int index = a.family == IndexFamily::Shifted ? a.c - t.value() : a.c;
    return {index, -(index + t.value())};
}

BipartitionMatrix a_tilde(FunctorIndex a, ParamT t, int max_size) {
    return box_moves(a, t, max_size, BoxMove::BlackAdd, BoxMove::WhiteRemove);
}

BipartitionMatrix e_tilde(FunctorIndex a, ParamT t, int max_size) {
    return box_moves(a, t, max_size, BoxMove::BlackRemove, BoxMove::WhiteAdd);
}

BipartitionMatrix a_matrix(FunctorIndex a, ParamT t, int max_size) {
    const int padded = max_size + 1;
    const BipartitionMatrix d = D_matrix(t, padded);
    const BipartitionMatrix out = (d * a_tilde(a, t, padded) * d.unitriangular_inverse()).restricted(max_size);
    require_nonnegative(out, "a_matrix");
    return out;
}

BipartitionMatrix b_matrix(ParamT t, int max_size) {
    const BipartitionMatrix out = B_matrix(max_size) * D_inverse(t, max_size);
    require_nonnegative(out, "b_matrix");
    return out;
}

std::int64_t hom_dim(const Bipartition& lambda, const Bipartition& mu, ParamT t) {
    std::int64_t total = 0;
    for (const auto& nu : bipartitions_up_to(std::min(lambda.size(), mu.size())))
        total += static_cast<std::int64_t>(mult_D(lambda, nu, t)) * mult_D(mu, nu, t);
    return total;
}

std::string EigenLabel::to_string() const {
    if (kind == Kind::Int) return std::to_string(c);
    if (c == 0) return "-t";
    return std::to_string(c) + "-t";
}

std::optional<EigenLabel> x_eigenvalue(const Bipartition& lambda, const Bipartition& mu) {
    if (mu.white == lambda.white)
        for (int c : addable_contents(lambda.black))
            if (add_box(lambda.black, c) == mu.black) return EigenLabel{EigenLabel::Kind::Int, c};
    if (mu.black == lambda.black)
        for (int c : removable_contents(lambda.white))
            if (remove_box(lambda.white, c) == mu.white) return EigenLabel{EigenLabel::Kind::Shifted, -c};
    return std::nullopt;
}

StandardFiltration f_on_standard(const Bipartition& lambda, FunctorIndex a, ParamT t) {
    const BoxSelection sel = select_boxes(a, t);
    StandardFiltration out;
    if (sel.black)
        if (auto b = add_box(lambda.black, *sel.black)) out.sub = Bipartition{*b, lambda.white};
    if (sel.white)
        if (auto w = remove_box(lambda.white, *sel.white)) out.quot = Bipartition{lambda.black, *w};
    return out;
}

}  // namespace deligne
