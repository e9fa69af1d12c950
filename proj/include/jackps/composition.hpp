#ifndef JACKPS_COMPOSITION_HPP
#define JACKPS_COMPOSITION_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "jackps/rational.hpp"

namespace jackps {

/// A composition eta = (eta_1, ..., eta_N) of nonnegative integer parts.
/// Immutable value type; the index of every Jack-type object.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    int degree() const;

    /// 1-based part access: part(i) = eta_i.
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<int>& parts() const { return parts_; }

    bool is_partition() const; // weakly decreasing

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

    std::string str() const; // "(1,0,2)"

private:
    std::vector<int> parts_;
};

/// A cell of the diagram of a composition; row i, column j, both 1-based,
/// with 1 <= j <= eta_i for membership.
struct Cell {
    int row;
    int col;
};

/// The weakly decreasing rearrangement eta^+.
Composition sort_to_partition(const Composition& eta);

/// Outcome of comparing two compositions in the partial order <.
/// Equal compositions are not related, hence Incomparable.
enum class Precedence { Before, After, Incomparable };

/// The order < on compositions of equal degree and length:
/// nu < eta iff nu^+ < eta^+ in dominance, or nu^+ = eta^+ and nu < eta
/// in dominance (all partial sums <=, vectors distinct).
Precedence precedes(const Composition& nu, const Composition& eta);

bool strictly_precedes(const Composition& nu, const Composition& eta);

/// Spectral vector: bar(eta)_i = alpha eta_i - #{k<i | eta_k >= eta_i}
///                                          - #{k>i | eta_k > eta_i}.
std::vector<Rat> spectral_vector(const Composition& eta, const Rat& alpha);

std::vector<Cell> diagram_cells(const Composition& eta);

/// Arm and leg of a diagram cell:
///   a(i,j) = eta_i - j,
///   l(i,j) = #{k<i | j <= eta_k + 1 <= eta_i} + #{k>i | j <= eta_k <= eta_i}.
std::pair<int, int> arm_leg(const Composition& eta, Cell cell);

/// Hook products (d_eta, d'_eta):
///   d  = prod over cells of (alpha (a+1) + l + 1),
///   d' = prod over cells of (alpha (a+1) + l).
/// Empty diagram gives (1, 1).
std::pair<Rat, Rat> hook_products(const Composition& eta, const Rat& alpha);

/// Generalized Pochhammer symbol [u]_lambda as a finite product:
///   prod_j prod_{m=0}^{lambda_j - 1} (u - (j-1)/alpha + m).
/// lambda must be a partition.
Rat gen_pochhammer(const Rat& u, const Composition& lambda, const Rat& alpha);

/// The ratio [u]_top / [u]_bot computed slot-by-slot, i.e.
///   prod_j prod_{m=bot_j}^{top_j - 1} (u - (j-1)/alpha + m),
/// valid whenever top_j >= bot_j for every row (bot padded with zeros).
/// Cancels matching factors exactly, so it stays finite where the plain
/// ratio would be 0/0.
Rat poch_ratio(const Rat& u, const Composition& top, const Composition& bot,
               const Rat& alpha);

/// (e_lambda, e'_lambda) = (alpha^|lambda| [1 + N/alpha]_lambda,
///                          [1 + (N-1)/alpha]_lambda).
std::pair<Rat, Rat> e_factors(const Composition& lambda, int nvars,
                              const Rat& alpha);

/// All compositions of |.| = degree into exactly nvars parts,
/// lexicographically ordered.
std::vector<Composition> compositions_of_degree(int degree, int nvars);

/// The cone C(eta) = { nu : |nu| = |eta|, nu < eta } together with eta
/// itself, enumerated by filtering all compositions of the degree.
std::vector<Composition> cone_of(const Composition& eta);

} // namespace jackps

#endif
