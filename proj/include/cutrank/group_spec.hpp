#pragma once

#include <iosfwd>
#include <string>

#include "cutrank/group.hpp"

namespace cutrank {

/**
 * Group-spec mini-language:
 *
 *   "C<n>"            cyclic of order n
 *   "A[<n1>,<n2>,..]" abelian with the given cyclic factors ("A[]" is trivial)
 *   "D<2n>"           dihedral of order 2n (2n even, >= 6)
 *   "Q<4m>"           generalized quaternion of order 4m (4m divisible by 4, >= 8)
 *   "M(<n>,<t>,<l>,<r>)" split metacyclic presentation
 *   "<spec>x<spec>"   direct product
 *
 * Whitespace is insignificant. Parse failures throw Error(Errc::Parse);
 * orders above `cap` throw Error(Errc::CapExceeded).
 */
FiniteGroup parse_group_spec(const std::string& spec, int cap = kDefaultOrderCap);

/// Cayley-table CSV: order^2 integer entries, row g / column h holding the
/// index of g*h, 0-based, index 0 the identity. Validated on load.
FiniteGroup group_from_cayley_csv(std::istream& in, int cap = kDefaultOrderCap);
FiniteGroup group_from_cayley_csv_file(const std::string& path, int cap = kDefaultOrderCap);

} // namespace cutrank
