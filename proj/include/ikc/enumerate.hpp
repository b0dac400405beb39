#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ikc/term.hpp"

namespace ikc {

// Closed well-formed terms of size 1..max_size, one per α-class, binders
// named v0, v1, … by depth. Binder indexes range over `idxs`; when `degree`
// is set only terms of that degree are returned. Ordered by size, then by
// generation order.
std::vector<Term> enumerate_closed(std::size_t max_size, const std::vector<Index>& idxs,
                                   const std::optional<Index>& degree = std::nullopt);

// Every well-formed term of size 1..max_size whose variables (free and
// bound) use only `names` and `idxs`, deduplicated up to α.
std::vector<Term> enumerate_open(std::size_t max_size, const std::vector<std::string>& names,
                                 const std::vector<Index>& idxs);

// A random well-formed term of roughly `size` constructors over the given
// names and indexes, with a bias toward building β- and η-redexes.
Term random_term(std::mt19937_64& rng, std::size_t size, const std::vector<std::string>& names,
                 const std::vector<Index>& idxs);

}  // namespace ikc
