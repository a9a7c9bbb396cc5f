#pragma once

#include <string>
#include <vector>

#include "goeritz/goeritz.hpp"

namespace goeritz {

/// One end of the arc I passing through a meridian disk. dir = +1 creates an
/// intersection point of I with the disk system, dir = -1 removes one.
struct CrossEvent {
  int end = 0;
  int disk = 1;
  int dir = 1;
  bool operator==(const CrossEvent&) const = default;
};

/// Generic isotopy recorded as its sequence of crossing events. Rewrites
/// applied to a schedule are appended to `provenance`.
struct Schedule {
  int genus = 1;
  std::vector<CrossEvent> events;
  std::vector<std::string> provenance;

  std::string to_string() const;
};

/// Throws InvalidSchedule naming the first prefix that breaks the
/// invariants: an event out of range, a removal on a disk with no live
/// intersection, or a nonzero count at the end (prefix = events.size()).
void validate(const Schedule& s);

/// Maximum over prefixes of the total intersection count.
int w_width(const Schedule& s);

/// Concatenation; both inputs return to zero so the width is the max.
Schedule w_concat(const Schedule& s1, const Schedule& s2);

/// Cuts at every interior prefix where the total count returns to zero.
std::vector<Schedule> w_split(const Schedule& s);

/// Rewrites a same-end block [(e,i,+),(e,i,-)] into two opposite
/// pass-throughs [(e,i,+),(e',i,-),(e',i,+),(e,i,-)]. Throws
/// PreconditionError for any other input.
Schedule w_same_end(const Schedule& s);

/// Crossing schedule of the standard isotopy realizing a word: anchored
/// letters and Rho0 avoid the disks; each meridian crossing of an F(j) loop
/// is a block where the leading end enters the disk and the trailing end
/// leaves it. Forward F letters lead with the end at x1, inverse letters with
/// the end at x0.
Schedule w_canonical(const GoeritzWord& word);

struct ThinResult {
  GoeritzWord residual;
  GoeritzWord anchored_part;
  GoeritzWord word;
  Schedule schedule;
  int width = 0;
};

/// residual * anchored_part from g_decompose, with adjacent inverse pairs
/// cancelled, and its canonical schedule.
ThinResult w_thin(const GoeritzWord& word);

}  // namespace goeritz
