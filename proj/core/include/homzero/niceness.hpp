#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homzero/f2_module.hpp"
#include "homzero/perm_group.hpp"

namespace homzero::f2 {

enum class Niceness { VeryNice, NiceNotVeryNice, NotNice, Unknown };

std::string to_string(Niceness v);

struct NicenessReport {
  Niceness verdict = Niceness::Unknown;
  // Largest k for which k-transitivity was verified (search stops at the
  // first failure or at a resource cap, whichever comes first).
  int transitivity_degree = 0;
  std::optional<SimplicityVerdict> heart;
  std::vector<std::string> caveats;
  std::string detail;
};

// Taxonomy of doubly transitive actions by the structure of the heart:
// very nice iff the heart is absolutely simple, nice iff simple. A group of
// order 3 on 3 points is nice (not very nice) as a special case despite not
// being doubly transitive. Groups passed in without a catalogue family tag
// get the caveat "heart-criterion": for them the verdict rests on the heart
// computation alone rather than on a recognized family.
NicenessReport classify_niceness(const grp::PermGroup& g, std::uint64_t seed = kDefaultSimplicitySeed);

}  // namespace homzero::f2
