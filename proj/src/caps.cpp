#include "deligne/caps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <stdexcept>

namespace deligne {

std::optional<int> CapDiagram::partner(int left) const {
    auto it = std::lower_bound(caps.begin(), caps.end(), left, [](const Cap& c, int x) { return c.left < x; });
    if (it == caps.end() || it->left != left) return std::nullopt;
    return it->right;
}

std::vector<Cap> nearest_matching(const std::vector<Symbol>& labels, int first, std::vector<int>* unmatched_crosses,
                                  std::vector<int>* unmatched_circles) {
    std::vector<Cap> caps;
    std::vector<int> open;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int s = first + static_cast<int>(i);
        if (labels[i] == Symbol::Cross) {
            open.push_back(s);
        } else if (labels[i] == Symbol::Circ) {
            if (open.empty()) {
                if (unmatched_circles) unmatched_circles->push_back(s);
            } else {
                caps.push_back({open.back(), s});
                open.pop_back();
            }
        }
    }
    if (unmatched_crosses) *unmatched_crosses = open;
    std::sort(caps.begin(), caps.end());
    return caps;
}

CapDiagram build_caps(const Bipartition& mu, ParamT t, std::optional<Interval> window_hint) {
    if (!t.is_integer()) throw std::invalid_argument("build_caps requires integer t");
    CapDiagram cd;
    cd.base = build_diagram(mu, t, Family::Dprime);
    Interval window = window_hint ? hull(*window_hint, cd.base.window) : cd.base.window;
    int crosses = 0;
    for (int s = window.lo; s <= window.hi; ++s)
        if (cd.base.at(s) == Symbol::Cross) ++crosses;
    // Past window.hi everything is a circle, so one extra position per open
    // cross closes them all.
    cd.extended = {window.lo, window.hi + crosses};

    std::vector<Symbol> labels;
    for (int s = cd.extended.lo; s <= cd.extended.hi; ++s) labels.push_back(cd.base.at(s));
    std::vector<int> open;
    cd.caps = nearest_matching(labels, cd.extended.lo, &open, &cd.outside_matched);
    if (!open.empty()) throw std::logic_error("build_caps: extended window left a cross unmatched");
    return cd;
}

std::vector<Cap> lift_matching(const std::vector<Symbol>& labels, int first) {
    std::vector<Cap> caps;
    std::vector<int> open;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int s = first + static_cast<int>(i);
        if (labels[i] == Symbol::Circ) {
            open.push_back(s);
        } else if (labels[i] == Symbol::Cross && !open.empty()) {
            caps.push_back({open.back(), s});
            open.pop_back();
        }
    }
    std::sort(caps.begin(), caps.end());
    return caps;
}

std::vector<Cap> lift_caps(const Bipartition& lambda, ParamT t, Interval window) {
    if (!t.is_integer()) throw std::invalid_argument("lift_caps requires integer t");
    const WeightDiagram d = build_diagram(lambda, t, Family::Dprime);
    std::vector<Symbol> labels;
    for (int s = window.lo; s <= window.hi; ++s) labels.push_back(d.at(s));
    return lift_matching(labels, window.lo);
}

int mult_D_with_margin(const Bipartition& lambda, const Bipartition& mu, ParamT t, int extra) {
    if (t.is_generic()) return lambda == mu ? 1 : 0;
    if (lambda == mu) return 1;

    const WeightDiagram dl = build_diagram(lambda, t, Family::Dprime);
    const WeightDiagram dm = build_diagram(mu, t, Family::Dprime);
    Interval joint = hull(dl.window, dm.window);
    joint.lo -= extra;
    joint.hi += extra;

    std::set<int> x_lambda, x_mu;
    for (int s = joint.lo; s <= joint.hi; ++s) {
        const Symbol a = dl.at(s);
        const Symbol b = dm.at(s);
        const bool core_a_circ = a == Symbol::Cross || a == Symbol::Circ;
        const bool core_b_circ = b == Symbol::Cross || b == Symbol::Circ;
        if (core_a_circ != core_b_circ || (!core_a_circ && a != b)) return 0;
        if (a == Symbol::Cross) x_lambda.insert(s);
        if (b == Symbol::Cross) x_mu.insert(s);
    }

    // Left of the joint window both diagrams are all crosses, so no lift cap
    // of d'_lambda reaches outside it.
    std::map<int, int> left_end_of;
    for (const Cap& c : lift_caps(lambda, t, joint)) left_end_of[c.right] = c.left;

    std::set<int> landed;
    for (int x : x_lambda) {
        if (x_mu.count(x)) continue;
        auto it = left_end_of.find(x);
        if (it == left_end_of.end()) return 0;
        landed.insert(it->second);
    }
    std::set<int> gained;
    std::set_difference(x_mu.begin(), x_mu.end(), x_lambda.begin(), x_lambda.end(),
                        std::inserter(gained, gained.end()));
    return landed == gained ? 1 : 0;
}

int mult_D(const Bipartition& lambda, const Bipartition& mu, ParamT t) { return mult_D_with_margin(lambda, mu, t, 0); }

BipartitionMatrix D_matrix(ParamT t, int max_size) {
    if (t.is_generic()) return BipartitionMatrix::identity(max_size);
    // Group by core first; mult_D is only evaluated inside a linkage class.
    // Every stable window of a bipartition of size <= max_size lies in span.
    const int k = t.value();
    const Interval span{std::min(k, 0) - max_size - 1, std::max(k, 0) + max_size};
    std::map<std::string, std::vector<Bipartition>> classes;
    for (const auto& b : bipartitions_up_to(max_size)) {
        const WeightDiagram core = core_of(build_diagram(b, t, Family::Dprime));
        std::string key;
        for (int s = span.lo; s <= span.hi; ++s) key += symbol_char(core.at(s));
        classes[key].push_back(b);
    }
    BipartitionMatrix m(max_size);
    for (const auto& [_, members] : classes)
        for (const auto& r : members)
            for (const auto& c : members) m.set(r, c, mult_D(r, c, t));
    return m;
}

BipartitionMatrix D_inverse(ParamT t, int max_size) { return D_matrix(t, max_size).unitriangular_inverse(); }

}  // namespace deligne
