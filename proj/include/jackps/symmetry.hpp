#ifndef JACKPS_SYMMETRY_HPP
#define JACKPS_SYMMETRY_HPP

#include <set>
#include <string>
#include <vector>

#include "jackps/composition.hpp"

namespace jackps {

/// A permutation w of positions {1, ..., N}.  Acts on compositions and
/// exponent vectors by w(lambda)_p = lambda_{w^{-1}(p)}, which matches
/// s_{jk} swapping the variables z_j and z_k.
class Permutation {
public:
    explicit Permutation(std::vector<int> images); // images[p-1] = w(p)

    static Permutation identity(int n);
    static Permutation transposition(int n, int j, int k);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int p) const { return img_.at(static_cast<std::size_t>(p - 1)); }

    Permutation inverse() const;
    Permutation compose(const Permutation& v) const; // (w o v)(p) = w(v(p))
    int sign() const;
    bool is_identity() const;

    Composition apply(const Composition& c) const;
    std::vector<int> apply(const std::vector<int>& exps) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string str() const; // one-line image list "[2,1,3]"

private:
    std::vector<int> img_;
};

/// A maximal run of I or J together with its successor position: the
/// interval of variables the run's transpositions act on.
struct Block {
    int lo;       // first position, 1-based
    int hi;       // last position, inclusive
    bool antisym; // true for a J block

    int size() const { return hi - lo + 1; }
};

/// The pair (I, J) of disjoint simple-root index sets on {1,...,N-1}.
/// Validity also requires the coloring rule: no element of I adjacent
/// (distance 1) to an element of J, so the extended blocks are disjoint
/// intervals of {1,...,N}.
class SymmetrySpec {
public:
    SymmetrySpec(int nvars, std::set<int> i_set, std::set<int> j_set);

    int nvars() const { return n_; }
    const std::set<int>& i_set() const { return i_; }
    const std::set<int>& j_set() const { return j_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    std::vector<Block> i_blocks() const;
    std::vector<Block> j_blocks() const;

    /// R_{J,+}: pairs (j,k), j < k, j and k in the same extended J block,
    /// in lexicographic order.
    std::vector<std::pair<int, int>> r_j_plus() const;

    /// |W_{I u J}| = prod |I~_s|! prod |J~_s|!.
    BigInt group_order() const;

    std::string str() const;

private:
    int n_;
    std::set<int> i_, j_;
    std::vector<Block> blocks_;
};

/// The staircase composition delta of (18.1)-type: within each extended
/// J block the parts count down to 0, and vanish elsewhere.
Composition delta_of_spec(const SymmetrySpec& spec);

/// Per-block sorting request for orbit representatives.
enum class BlockSort { Decreasing, Increasing, Keep }; // +, -, 0

/// The orbit element eta^{(eps_I, eps_J)}: parts inside each extended I
/// block rearranged per eps_i, inside each extended J block per eps_j,
/// untouched outside.  Requesting a strict J order (Decreasing or
/// Increasing) fails when a J block carries equal parts.
Composition orbit_variant(const Composition& eta, const SymmetrySpec& spec,
                          BlockSort eps_i, BlockSort eps_j);

/// The distinguished representative eta^* = eta^{(+,+)}: weakly decreasing
/// on I blocks, strictly decreasing on J blocks.
Composition eta_star(const Composition& eta, const SymmetrySpec& spec);

/// Whether eta is already its own distinguished representative.
bool is_valid_eta_star(const Composition& eta, const SymmetrySpec& spec);

/// M_{I,eta} = #{ w in W_I | w(eta) = eta }.
BigInt stabilizer_order(const Composition& eta, const std::set<int>& i_set,
                        int nvars);

struct SignedPermutation {
    Permutation w;
    int det_j; // +1 or -1
};

/// Enumerates W_{I u J} as the direct product of the symmetric groups on
/// the extended blocks, with det_J = sign of the J part.
std::vector<SignedPermutation> group_elements(const SymmetrySpec& spec);

/// The elements of W_J alone (det_J = sign).
std::vector<SignedPermutation> wj_elements(const SymmetrySpec& spec);

/// Distinct images of eta under W_{I u J}, sorted.
std::vector<Composition> orbit_of(const Composition& eta,
                                  const SymmetrySpec& spec);

} // namespace jackps

#endif
