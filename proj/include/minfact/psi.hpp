#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minfact/chains.hpp"
#include "minfact/ncpart.hpp"
#include "minfact/perm.hpp"

namespace minfact {

// Partition constructors used to describe the merge map's case templates.

/// p with all labels shifted up by i.
NCPartition shift(const NCPartition& p, int i);

/// Concatenation: p on {1..j} followed by q shifted up by j. Requires p
/// standard (ground exactly {1..j}) and q standard.
NCPartition oplus(const NCPartition& p, const NCPartition& q);

/// One wrapping block {1..i} u {n-j+1..n} around p shifted up by i, where
/// n = i + j + |p|. Requires p standard.
NCPartition wrap(int i, int j, const NCPartition& p);

/// Relabel p by an order-preserving-on-blocks permutation of {1..n};
/// ground must be {1..n} with n = s.size().
NCPartition apply_permutation(const Permutation& s, const NCPartition& p);

/// One of the ten structural templates for the top step (pi_{r-1}, pi_{r-2})
/// of a chain, together with everything the merge map needs: the block
/// correspondence defining sigma and the bar position.
struct CaseMatch {
    int case_id = 0;  // 1..10
    int bar = 0;      // 1..n; bar drawn just left of this position
    /// (source block of pi_{r-2}) -> (its image block); sigma restricted to
    /// each source block is the increasing bijection onto its image.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    std::map<std::string, int> params;  // the case's named quantities
};

/// Every template matching the given top step; exactly one must match.
std::vector<CaseMatch> match_cases(const NCPartition& upper, const NCPartition& lower);

/// The unique matching template; throws if none or several match (that would
/// falsify the case analysis).
CaseMatch classify_case(const NCPartition& upper, const NCPartition& lower);

struct PsiResult {
    Chain gamma;  // element of N(a') with a' = a with last two parts fused
    int bar = 0;
    int case_id = 0;
    Permutation sigma;
};

/// The merge map: sends a chain of N(a), r >= 2, to a chain of N(a')
/// together with a bar position in {1..n}. Bijective onto N(a') x {1..n}.
PsiResult psi(const Chain& chain);

/// Inverse of psi: reconstructs the unique chain of N(a) mapping to
/// (gamma, bar). Throws on inputs outside N(a') x {1..n}.
Chain psi_inverse(const Chain& gamma, int bar, const FactorizationType& a);

/// Case recovery from the image partition and the bar alone (the inverse
/// classifier); exposed for the exhaustive agreement tests.
int classify_inverse_case(const NCPartition& image, int bar, int a_rm1, int a_r);

}  // namespace minfact
