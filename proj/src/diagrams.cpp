#include "deligne/diagrams.hpp"

#include <algorithm>
#include <stdexcept>

namespace deligne {

int ParamT::value() const {
    if (!value_) throw std::logic_error("ParamT::value() called on generic t");
    return *value_;
}

std::string ParamT::to_string() const { return value_ ? std::to_string(*value_) : "generic"; }

ParamT parse_param(const std::string& text) {
    if (text == "generic") return ParamT::generic();
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer or 'generic' for t, got '" + text + "'", text);
    }
    if (used != text.size()) throw ParseError("expected an integer or 'generic' for t, got '" + text + "'", text);
    return ParamT::integer(v);
}

char symbol_char(Symbol s) {
    switch (s) {
        case Symbol::Cross: return 'x';
        case Symbol::Gt: return '>';
        case Symbol::Lt: return '<';
        case Symbol::Circ: return 'o';
    }
    return '?';
}

Symbol symbol_from_char(char c) {
    switch (c) {
        case 'x': return Symbol::Cross;
        case '>': return Symbol::Gt;
        case '<': return Symbol::Lt;
        case 'o': return Symbol::Circ;
        default: throw std::invalid_argument(std::string("unknown diagram symbol '") + c + "'");
    }
}

std::string family_name(Family f) { return f == Family::D ? "d" : "dprime"; }

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

namespace {

// s in {nu_i + shift - i : i >= 1}
bool in_beta_set(const Partition& nu, int shift, int s) {
    const int l = nu.length();
    if (s <= shift - l - 1) return true;
    for (int i = 1; i <= l; ++i)
        if (nu.row(i) + shift - i == s) return true;
    return false;
}

// s in {i - nu_i - 1 : i >= 1}
bool in_dual_beta_set(const Partition& nu, int s) {
    const int l = nu.length();
    if (s >= l) return true;
    for (int i = 1; i <= l; ++i)
        if (i - nu.row(i) - 1 == s) return true;
    return false;
}

Symbol combine(bool in_c, bool in_d) {
    if (in_c && in_d) return Symbol::Cross;
    if (in_c) return Symbol::Gt;
    if (in_d) return Symbol::Lt;
    return Symbol::Circ;
}

Interval generic_window(const Bipartition& lambda, Family family) {
    const Partition& w = lambda.white;
    if (family == Family::D) return {-w.length() - 1, std::max(w.row(1), 0)};
    return {std::min(-w.row(1), 0) - 1, std::max(w.length(), 0)};
}

Interval window_for(const Bipartition& lambda, ParamT t, Family family) {
    return t.is_integer() ? stable_window(lambda, t, family) : generic_window(lambda, family);
}

}  // namespace

Symbol symbol_at(const Bipartition& lambda, ParamT t, Family family, int s) {
    const bool in_c = t.is_integer() && in_beta_set(lambda.black, t.value(), s);
    const bool in_d = family == Family::D ? in_beta_set(lambda.white, 0, s) : !in_dual_beta_set(lambda.white, s);
    return combine(in_c, in_d);
}

Interval stable_window(const Bipartition& lambda, ParamT t, Family family) {
    if (!t.is_integer()) throw std::invalid_argument("stable_window requires integer t");
    const int k = t.value();
    const Partition& b = lambda.black;
    const Partition& w = lambda.white;
    if (family == Family::D) return {std::min(k - b.length(), -w.length()) - 1, std::max({b.row(1) + k, w.row(1), 0})};
    return {std::min({k - b.length(), -w.row(1), 0}) - 1, std::max({b.row(1) + k, w.length(), 0})};
}

std::string WeightDiagram::symbols() const {
    std::string out;
    out.reserve(labels.size());
    for (Symbol s : labels) out += symbol_char(s);
    return out;
}

std::vector<int> WeightDiagram::crosses() const {
    std::vector<int> out;
    for (int s = window.lo; s <= window.hi; ++s)
        if (at(s) == Symbol::Cross) out.push_back(s);
    return out;
}

WeightDiagram build_diagram(const Bipartition& lambda, ParamT t, Family family) {
    WeightDiagram d;
    d.window = window_for(lambda, t, family);
    d.family = family;
    d.t = t;
    d.source = lambda;
    d.left_tail = t.is_integer() ? Symbol::Cross : Symbol::Lt;
    d.right_tail = Symbol::Circ;
    d.labels.reserve(static_cast<std::size_t>(d.window.width()));
    for (int s = d.window.lo; s <= d.window.hi; ++s) d.labels.push_back(symbol_at(lambda, t, family, s));
    return d;
}

WeightDiagram core_of(const WeightDiagram& d) {
    WeightDiagram c = d;
    auto strip = [](Symbol s) { return s == Symbol::Cross ? Symbol::Circ : s; };
    for (Symbol& s : c.labels) s = strip(s);
    c.left_tail = strip(c.left_tail);
    c.right_tail = strip(c.right_tail);
    return c;
}

bool same_core(const Bipartition& lambda, const Bipartition& mu, ParamT t) {
    if (lambda == mu) return true;
    const WeightDiagram a = core_of(build_diagram(lambda, t, Family::Dprime));
    const WeightDiagram b = core_of(build_diagram(mu, t, Family::Dprime));
    const Interval span = hull(a.window, b.window);
    for (int s = span.lo; s <= span.hi; ++s)
        if (a.at(s) != b.at(s)) return false;
    return a.left_tail == b.left_tail && a.right_tail == b.right_tail;
}

Bipartition decode_dprime(const std::vector<Symbol>& labels, Interval window, int t) {
    if (static_cast<int>(labels.size()) != window.width())
        throw std::invalid_argument("decode_dprime: label count does not match window");

    // Black track: C' = positions labeled x or >, listed in decreasing order.
    std::vector<int> c;
    for (int s = window.hi; s >= window.lo; --s) {
        Symbol sym = labels[static_cast<std::size_t>(s - window.lo)];
        if (sym == Symbol::Cross || sym == Symbol::Gt) c.push_back(s);
    }
    const int m = static_cast<int>(c.size());
    if (window.lo + m - t != 0) throw std::invalid_argument("decode_dprime: black track has the wrong charge");
    std::vector<int> black;
    for (int i = 1; i <= m; ++i) black.push_back(c[i - 1] - t + i);

    // White track: complement of D' = positions labeled > or o, increasing.
    std::vector<int> e;
    for (int s = window.lo; s <= window.hi; ++s) {
        Symbol sym = labels[static_cast<std::size_t>(s - window.lo)];
        if (sym == Symbol::Gt || sym == Symbol::Circ) e.push_back(s);
    }
    const int n = static_cast<int>(e.size());
    if (n - 1 - window.hi != 0) throw std::invalid_argument("decode_dprime: white track has the wrong charge");
    std::vector<int> white;
    for (int i = 1; i <= n; ++i) white.push_back(i - 1 - e[i - 1]);

    return {Partition(std::move(black)), Partition(std::move(white))};
}

std::string render_diagram(const WeightDiagram& d, std::optional<Interval> range) {
    const Interval r = range.value_or(d.window);
    int width = 1;
    for (int s = r.lo; s <= r.hi; ++s) width = std::max<int>(width, static_cast<int>(std::to_string(s).size()));
    std::string top, bottom;
    for (int s = r.lo; s <= r.hi; ++s) {
        std::string pos = std::to_string(s);
        std::string sym(1, symbol_char(d.at(s)));
        if (s > r.lo) {
            top += ' ';
            bottom += ' ';
        }
        top += std::string(static_cast<std::size_t>(width) - 1, ' ') + sym;
        bottom += std::string(static_cast<std::size_t>(width) - pos.size(), ' ') + pos;
    }
    return top + "\n" + bottom + "\n";
}

}  // namespace deligne
