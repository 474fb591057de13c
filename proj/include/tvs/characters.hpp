#pragma once

#include <vector>

#include "tvs/partition.hpp"

namespace tvs {

/// Irreducible character chi^lambda evaluated on cycle type mu (|lambda| = |mu|),
/// by the Murnaghan-Nakayama rule. Tables are memoized per size and thread-safe.
long long character(const Partition& lambda, const Partition& mu);

/// Row lambda of the character table of S_n, indexed like partitions_of(n).
const std::vector<long long>& character_row(const Partition& lambda);
/// Column mu (cycle type) of the character table, indexed by lambda.
const std::vector<long long>& character_column(const Partition& mu);

/// Border strips of size k removable from lambda: (remaining shape, height).
std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int k);

}  // namespace tvs
