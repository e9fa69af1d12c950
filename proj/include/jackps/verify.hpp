#ifndef JACKPS_VERIFY_HPP
#define JACKPS_VERIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jackps/identities.hpp"

namespace jackps {

/// Grid configuration for the verification suites.
struct VerifyOptions {
    int n_min = 1;
    int n_max = 3;
    int deg_max = 3;
    std::vector<Rat> alphas = {Rat(2), Rat(1, 2), Rat(5, 3)};
    std::vector<int> ks = {1};
    int a_max = 1;
    int b_max = 1;
    std::vector<Rat> rs = {Rat(7, 3), Rat(4)};
    int cutoff = 2;

    std::optional<Composition> eta;        // restrict to one composition
    std::optional<std::set<int>> i_set;    // restrict to one spec
    std::optional<std::set<int>> j_set;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite over the configured grid.  Instances are emitted
/// in deterministic (grid) order.  Degenerate parameters and precondition
/// violations propagate as exceptions.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const VerifyOptions& options);

/// All (I,J) pairs valid for N variables (including the empty pair),
/// in deterministic order.
std::vector<SymmetrySpec> enumerate_specs(int nvars);

/// Valid prescribed-symmetry labels for the spec with degree <= deg_max.
std::vector<Composition> enumerate_eta_stars(const SymmetrySpec& spec,
                                             int deg_max);

bool all_pass(const std::vector<VerificationReport>& reports);

} // namespace jackps

#endif
