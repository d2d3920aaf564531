#pragma once

#include "nmcg/presentation.hpp"

namespace nmcg {

/// Simplifies a presentation with two Tietze moves until neither applies:
///  - relators are cyclically reduced; trivial ones and repeats (up to cyclic
///    rotation and inversion) are deleted;
///  - a generator occurring exactly once in some relator is eliminated by
///    solving that relator for it and substituting everywhere.
/// Generators are tried in alphabet order, lowest index first; among the
/// relators that can eliminate a generator the shortest (then earliest) one
/// is used. The result is deterministic and the group is unchanged.
Presentation tietze_simplify(const Presentation& p);

}  // namespace nmcg
