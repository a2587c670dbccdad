#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "deligne/bipartition_matrix.hpp"
#include "deligne/diagrams.hpp"

namespace deligne {

/// Raised when a computed multiplicity comes out negative.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Which copy of sl_Z an index refers to. For non-integer t the black and
/// white moves split into two commuting actions: Integer (eigenvalue c,
/// black boxes only) and Shifted (eigenvalue c - t, white boxes only).
/// For integer t both tags collapse onto the ordinary index a = c, resp.
/// a = c - t.
enum class IndexFamily { Untagged, Integer, Shifted };

struct FunctorIndex {
    int c = 0;
    IndexFamily family = IndexFamily::Untagged;

    static FunctorIndex plain(int a) { return {a, IndexFamily::Untagged}; }
    static FunctorIndex integer(int c) { return {c, IndexFamily::Integer}; }
    static FunctorIndex shifted(int c) { return {c, IndexFamily::Shifted}; }

    std::string to_string() const;
};

/// The box contents selected by F_a: a black box of content `black` and a
/// white box of content `white` (either may be absent). Throws
/// std::invalid_argument for an untagged index with generic t.
struct BoxSelection {
    std::optional<int> black;
    std::optional<int> white;
};
BoxSelection select_boxes(FunctorIndex a, ParamT t);

/// Entry (lambda, mu) = 1 iff mu in lambda + black box_a or
/// lambda - white box_{-(a+t)}.
BipartitionMatrix a_tilde(FunctorIndex a, ParamT t, int max_size);
/// Entry (lambda, mu) = 1 iff mu in lambda - black box_a or
/// lambda + white box_{-(a+t)}.
BipartitionMatrix e_tilde(FunctorIndex a, ParamT t, int max_size);

/// D * a_tilde * D^{-1}, evaluated at max_size + 1 and restricted. Throws
/// InconsistencyError on a negative entry.
BipartitionMatrix a_matrix(FunctorIndex a, ParamT t, int max_size);

/// B * D^{-1}. Throws InconsistencyError on a negative entry.
BipartitionMatrix b_matrix(ParamT t, int max_size);

/// dim Hom(T(lambda), T(mu)) = sum_nu D^lambda_nu D^mu_nu.
std::int64_t hom_dim(const Bipartition& lambda, const Bipartition& mu, ParamT t);

/// Eigenvalue of x on the T(mu) summand of F(T(lambda)): either an integer
/// c, or c - t kept formal in t.
struct EigenLabel {
    enum class Kind { Int, Shifted };
    Kind kind = Kind::Int;
    int c = 0;

    /// The numeric eigenvalue for integer t.
    int value(int t) const { return kind == Kind::Int ? c : c - t; }
    std::string to_string() const;
    friend bool operator==(const EigenLabel&, const EigenLabel&) = default;
    friend auto operator<=>(const EigenLabel&, const EigenLabel&) = default;
};

/// Int(content of the added box) when mu is lambda plus a black box,
/// Shifted(-content of the removed box) when mu is lambda minus a white box,
/// nullopt otherwise. Independent of t.
std::optional<EigenLabel> x_eigenvalue(const Bipartition& lambda, const Bipartition& mu);

/// The standard filtration 0 -> V(sub) -> F_a V(lambda) -> V(quot) -> 0.
struct StandardFiltration {
    std::optional<Bipartition> sub;
    std::optional<Bipartition> quot;
};
StandardFiltration f_on_standard(const Bipartition& lambda, FunctorIndex a, ParamT t);

}  // namespace deligne
