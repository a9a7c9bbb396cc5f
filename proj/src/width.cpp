#include "goeritz/width.hpp"

#include <algorithm>
#include <sstream>

namespace goeritz {

std::string Schedule::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    if (k) os << ", ";
    os << '(' << e.end << ',' << e.disk << ',' << (e.dir > 0 ? '+' : '-') << ')';
  }
  os << ']';
  return os.str();
}

void validate(const Schedule& s) {
  if (s.genus < 1) throw InvalidSchedule("schedule genus must be at least 1", 0);
  std::vector<int> live(s.genus + 1, 0);
  for (std::size_t k = 0; k < s.events.size(); ++k) {
    const CrossEvent& e = s.events[k];
    if (e.end != 0 && e.end != 1) throw InvalidSchedule("event end must be 0 or 1", k + 1);
    if (e.disk < 1 || e.disk > s.genus) throw InvalidSchedule("event disk out of range", k + 1);
    if (e.dir != 1 && e.dir != -1) throw InvalidSchedule("event direction must be +1 or -1", k + 1);
    live[e.disk] += e.dir;
    if (live[e.disk] < 0) {
      throw InvalidSchedule("removal on disk " + std::to_string(e.disk) + " with no live intersection",
                            k + 1);
    }
  }
  for (int i = 1; i <= s.genus; ++i) {
    if (live[i] != 0) {
      throw InvalidSchedule("schedule ends with intersections on disk " + std::to_string(i),
                            s.events.size());
    }
  }
}

int w_width(const Schedule& s) {
  validate(s);
  int count = 0;
  int best = 0;
  for (const auto& e : s.events) best = std::max(best, count += e.dir);
  return best;
}

Schedule w_concat(const Schedule& s1, const Schedule& s2) {
  if (s1.genus != s2.genus) throw ModelMismatch("schedules of different genus");
  Schedule out = s1;
  out.events.insert(out.events.end(), s2.events.begin(), s2.events.end());
  out.provenance.insert(out.provenance.end(), s2.provenance.begin(), s2.provenance.end());
  if (w_width(out) != std::max(w_width(s1), w_width(s2))) {
    throw InvariantViolation("width of a concatenation differs from the max of the widths");
  }
  return out;
}

std::vector<Schedule> w_split(const Schedule& s) {
  validate(s);
  std::vector<Schedule> pieces;
  Schedule cur{s.genus, {}, {}};
  int count = 0;
  for (const auto& e : s.events) {
    cur.events.push_back(e);
    count += e.dir;
    if (count == 0) {
      pieces.push_back(cur);
      cur.events.clear();
    }
  }
  if (!pieces.empty()) pieces.front().provenance = s.provenance;
  return pieces;
}

Schedule w_same_end(const Schedule& s) {
  validate(s);
  const auto& ev = s.events;
  if (ev.size() != 2 || ev[0].dir != 1 || ev[1].dir != -1 || ev[0].disk != ev[1].disk ||
      ev[0].end != ev[1].end) {
    throw PreconditionError("expected a same-end block [(e,i,+),(e,i,-)], got " + s.to_string());
  }
  const int e = ev[0].end;
  const int other = 1 - e;
  const int i = ev[0].disk;
  Schedule out{s.genus, {{e, i, 1}, {other, i, -1}, {other, i, 1}, {e, i, -1}}, s.provenance};
  out.provenance.push_back("same-end block on E" + std::to_string(i) + " at end " +
                           std::to_string(e) +
                           " pushed across the parallelism subdisk: two opposite pass-throughs");
  return out;
}

Schedule w_canonical(const GoeritzWord& word) {
  const HandlebodyModel model(word.genus());
  Schedule s{word.genus(), {}, {}};
  int parity = 0;
  for (const auto& g : word.gens()) {
    if (g.kind == GenKind::Rho0) {
      parity ^= 1;
      continue;
    }
    if (g.kind != GenKind::F) continue;
    // At parity 0 the end of I sitting at x1 is end 1.
    const int lead = (g.exp > 0 ? 1 : 0) ^ parity;
    const auto& cs = model.crossings(g.index);
    auto push = [&](const Crossing& c) {
      s.events.push_back({lead, c.disk, 1});
      s.events.push_back({1 - lead, c.disk, -1});
    };
    if (g.exp > 0) {
      std::for_each(cs.begin(), cs.end(), push);
    } else {
      std::for_each(cs.rbegin(), cs.rend(), push);
    }
  }
  return s;
}

ThinResult w_thin(const GoeritzWord& word) {
  const Decomposition d = g_decompose(word);
  ThinResult r;
  r.residual = d.residual;
  r.anchored_part = d.anchored_part;
  r.word = (d.residual * d.anchored_part).reduced();
  r.schedule = w_canonical(r.word);
  r.width = w_width(r.schedule);
  if (r.width > 1) throw InvariantViolation("canonical schedule of a thin word has width above 1");
  return r;
}

}  // namespace goeritz
