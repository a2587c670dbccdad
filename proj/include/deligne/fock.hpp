#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "deligne/bipartition_matrix.hpp"
#include "deligne/partitions.hpp"

namespace deligne {

/// Finite integer combination of basis vectors labelled by Key. Zero
/// coefficients are never stored.
template <class Key>
class LinearCombination {
public:
    using Terms = std::map<Key, std::int64_t>;

    LinearCombination() = default;
    static LinearCombination basis(Key k) {
        LinearCombination v;
        v.terms_.emplace(std::move(k), 1);
        return v;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Key& k, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted && (it->second += c) == 0) terms_.erase(it);
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(std::int64_t s, const LinearCombination& v) {
        LinearCombination out;
        for (const auto& [k, c] : v.terms_) out.add(k, s * c);
        return out;
    }
    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    Terms terms_;
};

using FockVector = LinearCombination<Partition>;
using BiFockVector = LinearCombination<Bipartition>;
/// Vectors of the tautological representation C^Z, basis u_i.
using TautVector = LinearCombination<int>;

/// Element of the n-th exterior power of C^Z; keys are strictly decreasing
/// sequences of length n.
struct WedgeVector {
    int n = 0;
    LinearCombination<std::vector<int>> terms;

    static WedgeVector basis(std::vector<int> seq);
    friend bool operator==(const WedgeVector&, const WedgeVector&) = default;
};

/// Coefficients of the fundamental weights, zero entries omitted.
using SlzWeight = std::map<int, int>;

struct Plain {};
struct TwistedDual {};
struct ShiftedDual {
    int t = 0;
};
/// F tensor the t-shifted dual, on the bipartition basis.
struct Tensor {
    int t = 0;
};
struct Tautological {};
struct Wedge {
    int n = 1;
};

using Mode = std::variant<Plain, TwistedDual, ShiftedDual, Tensor, Tautological, Wedge>;
using AnyVector = std::variant<FockVector, BiFockVector, TautVector, WedgeVector>;

enum class Gen { F, E };

FockVector apply(Gen g, int a, Plain, const FockVector& v);
FockVector apply(Gen g, int a, TwistedDual, const FockVector& v);
FockVector apply(Gen g, int a, ShiftedDual m, const FockVector& v);
BiFockVector apply(Gen g, int a, Tensor m, const BiFockVector& v);
TautVector apply(Gen g, int a, Tautological, const TautVector& v);
/// Throws std::invalid_argument if v.n differs from m.n.
WedgeVector apply(Gen g, int a, Wedge m, const WedgeVector& v);

/// Dispatches on the mode. Throws std::invalid_argument when the vector type
/// does not belong to the mode.
AnyVector apply_generator(Gen g, int a, const Mode& mode, const AnyVector& v);

/// The Cartan element h_a, acting diagonally by the weight of each basis
/// vector paired with the a-th coroot.
AnyVector apply_h(int a, const Mode& mode, const AnyVector& v);

/// (e_a f_b - f_b e_a)(v) - delta_ab h_a(v).
AnyVector commutator_defect(int a, int b, const Mode& mode, const AnyVector& v);

bool is_zero(const AnyVector& v);

/// The weight of v_nu: a -> n_a(nu).
SlzWeight omega(const Partition& nu);

/// a -> n_a(black) - n_{-(a+t)}(white).
SlzWeight bipartition_weight(const Bipartition& lambda, int t);

/// The order in which lambda <= mu: equal weights
/// n_a(black) - n_{-(a+t)}(white) for every a, and partial sums of
/// lambda.black dominating those of mu.black.
bool dominance_leq(const Bipartition& lambda, const Bipartition& mu, int t);

/// Energy sum_s (i_{-s} + s) of a strictly decreasing sequence, or nullopt
/// if some i_{-s} + s is negative. Throws std::invalid_argument if the
/// sequence is not strictly decreasing.
std::optional<int> energy(const std::vector<int>& seq);
int energy(const Partition& nu);

/// The first n entries (nu_1, nu_2 - 1, nu_3 - 2, ...) of the semi-infinite
/// wedge of v_nu. Throws std::invalid_argument if n < 1.
std::vector<int> wedge_sequence(const Partition& nu, int n);

WedgeVector pi_n(const FockVector& v, int n);
/// Drops the last entry. Throws std::invalid_argument if w.n < 2.
WedgeVector phi_n(const WedgeVector& w);

/// Basis of the energy-k piece of the n-th wedge power: strictly decreasing
/// sequences of length n with i_{-s} + s >= 0 and energy <= k.
std::vector<std::vector<int>> wedge_basis(int n, int k);

/// Matrix of f_a (or e_a) on F tensor the t-shifted dual, on bipartitions
/// of size <= max_size. Images leaving the truncation are dropped.
BipartitionMatrix generator_matrix(Gen g, int a, int t, int max_size);

}  // namespace deligne
