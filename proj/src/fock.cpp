#include "deligne/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace deligne {

namespace {

std::optional<Partition> move_box(const Partition& nu, bool add, int content) {
    return add ? add_box(nu, content) : remove_box(nu, content);
}

// f_a and e_a on a partition basis vector, for the single-partition modes.
// Plain adds (f) or removes (e) a content-a box; the shifted dual removes (f)
// or adds (e) a box of content -(a + shift).
std::optional<Partition> plain_step(Gen g, int a, const Partition& nu) { return move_box(nu, g == Gen::F, a); }

std::optional<Partition> dual_step(Gen g, int a, int shift, const Partition& nu) {
    return move_box(nu, g == Gen::E, -(a + shift));
}

template <class Step>
FockVector map_partitions(const FockVector& v, Step step) {
    FockVector out;
    for (const auto& [nu, c] : v.terms())
        if (auto r = step(nu)) out.add(*r, c);
    return out;
}

int plain_h(int a, const Partition& nu) { return n_weight(nu, a); }
int dual_h(int a, int shift, const Partition& nu) { return -n_weight(nu, -(a + shift)); }

template <class V, class Eigen>
V scale_diagonal(const V& v, Eigen eigen) {
    V out;
    for (const auto& [k, c] : v.terms()) out.add(k, eigen(k) * c);
    return out;
}

template <class T>
const T& expect(const AnyVector& v, const char* mode) {
    if (const T* p = std::get_if<T>(&v)) return *p;
    throw std::invalid_argument(std::string("vector type does not match mode ") + mode);
}

AnyVector combine(const AnyVector& x, const AnyVector& y, int sign) {
    return std::visit(
        [&](const auto& a) -> AnyVector {
            using V = std::decay_t<decltype(a)>;
            const V& b = std::get<V>(y);
            if constexpr (std::is_same_v<V, WedgeVector>) {
                WedgeVector out = a;
                out.terms = sign > 0 ? a.terms + b.terms : a.terms - b.terms;
                return out;
            } else {
                return sign > 0 ? a + b : a - b;
            }
        },
        x);
}

}  // namespace

WedgeVector WedgeVector::basis(std::vector<int> seq) {
    WedgeVector w;
    w.n = static_cast<int>(seq.size());
    w.terms = LinearCombination<std::vector<int>>::basis(std::move(seq));
    return w;
}

FockVector apply(Gen g, int a, Plain, const FockVector& v) {
    return map_partitions(v, [&](const Partition& nu) { return plain_step(g, a, nu); });
}

FockVector apply(Gen g, int a, TwistedDual, const FockVector& v) {
    return map_partitions(v, [&](const Partition& nu) { return dual_step(g, a, 0, nu); });
}

FockVector apply(Gen g, int a, ShiftedDual m, const FockVector& v) {
    return map_partitions(v, [&](const Partition& nu) { return dual_step(g, a, m.t, nu); });
}

BiFockVector apply(Gen g, int a, Tensor m, const BiFockVector& v) {
    BiFockVector out;
    for (const auto& [lambda, c] : v.terms()) {
        if (auto b = plain_step(g, a, lambda.black)) out.add({*b, lambda.white}, c);
        if (auto w = dual_step(g, a, m.t, lambda.white)) out.add({lambda.black, *w}, c);
    }
    return out;
}

TautVector apply(Gen g, int a, Tautological, const TautVector& v) {
    TautVector out;
    for (const auto& [i, c] : v.terms()) {
        if (g == Gen::F && i == a) out.add(a + 1, c);
        if (g == Gen::E && i == a + 1) out.add(a, c);
    }
    return out;
}

WedgeVector apply(Gen g, int a, Wedge m, const WedgeVector& v) {
    if (v.n != m.n) throw std::invalid_argument("wedge vector length does not match mode");
    const int from = g == Gen::F ? a : a + 1;
    const int to = g == Gen::F ? a + 1 : a;
    WedgeVector out;
    out.n = v.n;
    for (const auto& [seq, c] : v.terms.terms()) {
        if (std::find(seq.begin(), seq.end(), to) != seq.end()) continue;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] != from) continue;
            std::vector<int> r = seq;
            r[i] = to;
            out.terms.add(r, c);
        }
    }
    return out;
}

AnyVector apply_generator(Gen g, int a, const Mode& mode, const AnyVector& v) {
    return std::visit(
        [&](const auto& m) -> AnyVector {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Tensor>) {
                return apply(g, a, m, expect<BiFockVector>(v, "tensor"));
            } else if constexpr (std::is_same_v<M, Tautological>) {
                return apply(g, a, m, expect<TautVector>(v, "tautological"));
            } else if constexpr (std::is_same_v<M, Wedge>) {
                return apply(g, a, m, expect<WedgeVector>(v, "wedge"));
            } else {
                return apply(g, a, m, expect<FockVector>(v, "fock"));
            }
        },
        mode);
}

AnyVector apply_h(int a, const Mode& mode, const AnyVector& v) {
    return std::visit(
        [&](const auto& m) -> AnyVector {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Plain>) {
                return scale_diagonal(expect<FockVector>(v, "plain"),
                                      [&](const Partition& nu) { return plain_h(a, nu); });
            } else if constexpr (std::is_same_v<M, TwistedDual>) {
                return scale_diagonal(expect<FockVector>(v, "twisted dual"),
                                      [&](const Partition& nu) { return dual_h(a, 0, nu); });
            } else if constexpr (std::is_same_v<M, ShiftedDual>) {
                return scale_diagonal(expect<FockVector>(v, "shifted dual"),
                                      [&](const Partition& nu) { return dual_h(a, m.t, nu); });
            } else if constexpr (std::is_same_v<M, Tensor>) {
                return scale_diagonal(expect<BiFockVector>(v, "tensor"), [&](const Bipartition& l) {
                    return plain_h(a, l.black) + dual_h(a, m.t, l.white);
                });
            } else if constexpr (std::is_same_v<M, Tautological>) {
                return scale_diagonal(expect<TautVector>(v, "tautological"),
                                      [&](int i) { return int(i == a) - int(i == a + 1); });
            } else {
                const WedgeVector& w = expect<WedgeVector>(v, "wedge");
                if (w.n != m.n) throw std::invalid_argument("wedge vector length does not match mode");
                WedgeVector out;
                out.n = w.n;
                out.terms = scale_diagonal(w.terms, [&](const std::vector<int>& seq) {
                    int e = 0;
                    for (int i : seq) e += int(i == a) - int(i == a + 1);
                    return e;
                });
                return out;
            }
        },
        mode);
}

AnyVector commutator_defect(int a, int b, const Mode& mode, const AnyVector& v) {
    const AnyVector ef = apply_generator(Gen::E, a, mode, apply_generator(Gen::F, b, mode, v));
    const AnyVector fe = apply_generator(Gen::F, b, mode, apply_generator(Gen::E, a, mode, v));
    AnyVector out = combine(ef, fe, -1);
    if (a == b) out = combine(out, apply_h(a, mode, v), -1);
    return out;
}

bool is_zero(const AnyVector& v) {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, WedgeVector>)
                return x.terms.is_zero();
            else
                return x.is_zero();
        },
        v);
}

SlzWeight omega(const Partition& nu) {
    SlzWeight w;
    for (int c : addable_contents(nu)) w[c] += 1;
    for (int c : removable_contents(nu)) w[c] -= 1;
    std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
    return w;
}

SlzWeight bipartition_weight(const Bipartition& lambda, int t) {
    SlzWeight w = omega(lambda.black);
    for (const auto& [c, n] : omega(lambda.white)) w[-c - t] -= n;
    std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
    return w;
}

bool dominance_leq(const Bipartition& lambda, const Bipartition& mu, int t) {
    if (bipartition_weight(lambda, t) != bipartition_weight(mu, t)) return false;
    const int len = std::max(lambda.black.length(), mu.black.length());
    int sl = 0, sm = 0;
    for (int i = 1; i <= len; ++i) {
        sl += lambda.black.row(i);
        sm += mu.black.row(i);
        if (sl < sm) return false;
    }
    return true;
}

std::optional<int> energy(const std::vector<int>& seq) {
    for (std::size_t s = 1; s < seq.size(); ++s)
        if (seq[s] >= seq[s - 1]) throw std::invalid_argument("energy: sequence is not strictly decreasing");
    int e = 0;
    for (std::size_t s = 0; s < seq.size(); ++s) {
        const int term = seq[s] + static_cast<int>(s);
        if (term < 0) return std::nullopt;
        e += term;
    }
    return e;
}

int energy(const Partition& nu) { return nu.size(); }

std::vector<int> wedge_sequence(const Partition& nu, int n) {
    if (n < 1) throw std::invalid_argument("wedge length must be at least 1");
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) seq[i - 1] = nu.row(i) - i + 1;
    return seq;
}

WedgeVector pi_n(const FockVector& v, int n) {
    if (n < 1) throw std::invalid_argument("wedge length must be at least 1");
    WedgeVector out;
    out.n = n;
    for (const auto& [nu, c] : v.terms()) out.terms.add(wedge_sequence(nu, n), c);
    return out;
}

WedgeVector phi_n(const WedgeVector& w) {
    if (w.n < 2) throw std::invalid_argument("phi_n needs wedge length at least 2");
    WedgeVector out;
    out.n = w.n - 1;
    for (const auto& [seq, c] : w.terms.terms()) out.terms.add(std::vector<int>(seq.begin(), seq.end() - 1), c);
    return out;
}

std::vector<std::vector<int>> wedge_basis(int n, int k) {
    std::vector<std::vector<int>> out;
    for (int m = 0; m <= k; ++m)
        for (const auto& p : partitions_of(m))
            if (p.length() <= n) out.push_back(wedge_sequence(p, n));
    std::sort(out.begin(), out.end());
    return out;
}

BipartitionMatrix generator_matrix(Gen g, int a, int t, int max_size) {
    BipartitionMatrix m(max_size);
    for (const auto& lambda : bipartitions_up_to(max_size)) {
        const BiFockVector image = apply(g, a, Tensor{t}, BiFockVector::basis(lambda));
        for (const auto& [mu, c] : image.terms()) m.set(lambda, mu, c);
    }
    return m;
}

}  // namespace deligne
