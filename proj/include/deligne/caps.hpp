#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "deligne/bipartition_matrix.hpp"
#include "deligne/diagrams.hpp"

namespace deligne {

struct Cap {
    int left;
    int right;
    friend bool operator==(const Cap&, const Cap&) = default;
    friend auto operator<=>(const Cap&, const Cap&) = default;
};

/// Caps drawn on d'_mu (integer t) over an extended window, each with a
/// cross at its left end and a circle at its right end.
///
/// Every cross in `extended` is the left end of exactly one cap. Circles in
/// the extended window that close a cap from a cross left of the window are
/// listed in `outside_matched`.
struct CapDiagram {
    WeightDiagram base;
    Interval extended;
    std::vector<Cap> caps;  // sorted by left end
    std::vector<int> outside_matched;

    /// Right end of the cap starting at `left`, if `left` is a cross in the
    /// extended window.
    std::optional<int> partner(int left) const;
};

/// Nearest-unmatched matching on a finite label sequence starting at
/// position `first`: every cross opens, every circle closes the most recent
/// open cross, > and < are skipped. Returns the caps found, and in
/// `unmatched_crosses` / `unmatched_circles` what was left over.
std::vector<Cap> nearest_matching(const std::vector<Symbol>& labels, int first,
                                  std::vector<int>* unmatched_crosses = nullptr,
                                  std::vector<int>* unmatched_circles = nullptr);

/// Throws std::invalid_argument for generic t.
CapDiagram build_caps(const Bipartition& mu, ParamT t, std::optional<Interval> window_hint = std::nullopt);

/// Caps with a circle at the left end and a cross at the right end, by the
/// nearest-unmatched scan with the roles of the two symbols exchanged.
/// Crosses with no circle to their left and circles with no cross to their
/// right stay unmatched.
std::vector<Cap> lift_matching(const std::vector<Symbol>& labels, int first);

/// The lift caps of d'_lambda over `window` (integer t). Positions outside a
/// stable window never carry a lift cap.
std::vector<Cap> lift_caps(const Bipartition& lambda, ParamT t, Interval window);

/// D^lambda_mu(t) in {0, 1}: whether d'_mu is obtained from d'_lambda by
/// sliding crosses from the right end to the left end of some of its lift
/// caps. Equals the standard-filtration multiplicity (T(lambda) : V(mu)).
int mult_D(const Bipartition& lambda, const Bipartition& mu, ParamT t);

/// As mult_D, with the joint window widened by `extra` on both sides.
int mult_D_with_margin(const Bipartition& lambda, const Bipartition& mu, ParamT t, int extra);

BipartitionMatrix D_matrix(ParamT t, int max_size);
BipartitionMatrix D_inverse(ParamT t, int max_size);

}  // namespace deligne
