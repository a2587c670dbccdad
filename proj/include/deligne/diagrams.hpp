#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deligne/partitions.hpp"

namespace deligne {

/// The parameter t of the Deligne category: an integer, or a symbolic
/// non-integer value. Every non-integer t behaves the same for everything
/// computed here, so no numeric value is carried.
class ParamT {
public:
    static ParamT integer(int k) { return ParamT(k); }
    static ParamT generic() { return ParamT(); }

    bool is_integer() const noexcept { return value_.has_value(); }
    bool is_generic() const noexcept { return !value_; }
    /// Throws std::logic_error when generic.
    int value() const;

    std::string to_string() const;

    friend bool operator==(const ParamT&, const ParamT&) = default;

private:
    ParamT() = default;
    explicit ParamT(int k) : value_(k) {}
    std::optional<int> value_;
};

/// Parses "generic" or a decimal integer.
ParamT parse_param(const std::string& text);

enum class Symbol { Cross, Gt, Lt, Circ };

/// 'x', '>', '<', 'o'.
char symbol_char(Symbol s);
Symbol symbol_from_char(char c);

enum class Family { D, Dprime };

std::string family_name(Family f);

struct Interval {
    int lo = 0;
    int hi = -1;
    bool contains(int s) const noexcept { return lo <= s && s <= hi; }
    int width() const noexcept { return hi - lo + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval hull(const Interval& a, const Interval& b);

/// The label of position s in d_lambda (family D) or d'_lambda (family Dprime).
Symbol symbol_at(const Bipartition& lambda, ParamT t, Family family, int s);

/// A window [L, R] outside of which the diagram equals its tails:
/// all crosses below L and all circles above R. Integer t only; throws
/// std::invalid_argument for generic t.
Interval stable_window(const Bipartition& lambda, ParamT t, Family family);

/// A weight diagram restricted to a finite window together with the two
/// constant tails it continues with.
struct WeightDiagram {
    Interval window;
    std::vector<Symbol> labels;
    Symbol left_tail = Symbol::Cross;
    Symbol right_tail = Symbol::Circ;
    Family family = Family::D;
    ParamT t = ParamT::generic();
    Bipartition source;

    /// Label at any integer position.
    Symbol at(int s) const noexcept {
        if (s < window.lo) return left_tail;
        if (s > window.hi) return right_tail;
        return labels[static_cast<std::size_t>(s - window.lo)];
    }

    std::string symbols() const;
    /// Positions in the window carrying a cross.
    std::vector<int> crosses() const;
};

WeightDiagram build_diagram(const Bipartition& lambda, ParamT t, Family family);

/// Every cross replaced by a circle (tails included).
WeightDiagram core_of(const WeightDiagram& d);

/// Whether core(d'_lambda) and core(d'_mu) agree at every integer.
bool same_core(const Bipartition& lambda, const Bipartition& mu, ParamT t);

/// Inverse of the Dprime construction for integer t: recovers the
/// bipartition from the sets of cross/> positions and cross/< positions.
/// `labels` covers `window`; positions below the window are crosses and
/// above it circles. Throws std::invalid_argument if no bipartition has
/// this diagram.
Bipartition decode_dprime(const std::vector<Symbol>& labels, Interval window, int t);

/// Two text lines: symbols, then positions, one column per position.
std::string render_diagram(const WeightDiagram& d, std::optional<Interval> range = std::nullopt);

}  // namespace deligne
