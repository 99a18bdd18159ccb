#pragma once

#include <string>

#include "json.hpp"
#include "minfact/chains.hpp"
#include "minfact/ncpart.hpp"
#include "minfact/perm.hpp"
#include "minfact/poly.hpp"
#include "minfact/trees.hpp"

namespace minfact {

// Wire formats. Permutation: {"n":4,"images":[2,1,4,3]}.
// Partition: {"ground":[1,..],"blocks":[[..],..]} in canonical order.
// Chain: {"a":[..],"n":n,"chain":[partition,..]}.
// Polynomial: ascending graded-lex term list with string coefficients.
// Tree: {"n":4,"parent":{"1":2,..}}.

nlohmann::json to_json(const Permutation& p);
Permutation perm_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NCPartition& p);
NCPartition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Chain& c);
Chain chain_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Factorization& f, int n);

nlohmann::json to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AndreTree& t);
nlohmann::json to_json(const CayleyTree& t);

nlohmann::json final_chain_to_json(int n, int k, const std::vector<NCPartition>& chain);

// Compact single-line text forms used by the CLI.
std::string text_of(const NCPartition& p);
std::string text_of(const Chain& c);
std::string text_of(const Factorization& f);

}  // namespace minfact
