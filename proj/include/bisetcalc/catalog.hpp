#pragma once

#include <string>
#include <vector>

#include "bisetcalc/group.hpp"

namespace bisetcalc {

// Built-in constructions: "C<n>", "S<n>" (n <= 5), "A<n>" (n <= 5),
// "D<2n>" (the number is the order), "Q8", "E<p>^2" (p in {2,3,5,7}).
// Throws std::invalid_argument for unknown names.
GroupPtr catalog_group(const std::string& name);
bool is_catalog_name(const std::string& name);

// Elementary abelian group of rank 2 for any prime p (table built directly;
// the catalog restricts the accepted spelling to small p).
GroupPtr elementary_abelian_rank2(int p);

// Group input file: { "name": string, "degree": int, "generators": [...] }
// where each generator is a list of cycles over 1-based points.
GroupPtr group_from_json_file(const std::string& path);

// Catalog name or a path to a JSON generator file.
GroupPtr parse_group_spec(const std::string& arg);

// Structural display name: "1", "C6", "E3^2", "C2xC4", "D8", "Q8", "S4", ...
// falls back to "G<order>".
std::string describe_group(const GroupPtr& g);

}  // namespace bisetcalc
