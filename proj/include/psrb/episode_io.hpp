#pragma once

// Episode outputs: JSONL step log with a trailing summary, per-candidate
// utility CSV and a three-row text timeline.

#include <iosfwd>
#include <vector>

#include "psrb/model.hpp"
#include "psrb/sim.hpp"

namespace psrb {

/// One JSON object per step, then one summary object.
void write_episode_jsonl(const EpisodeLog& log, int behaviour_class, std::ostream& out);

/// Columns: step, behavior, Au, W, risk, D (one row per evaluated candidate).
void write_utility_csv(const EpisodeLog& log, std::ostream& out);

/// Rows per step: resident behaviour (HB), robot behaviour (RB), governor recommendation (EGR).
void write_timeline(const EpisodeLog& log, std::ostream& out);

/// A blackboard entry reconstructed from the JSONL log together with the
/// desirability the log recorded for it.
struct LoggedEntry {
  int step = 0;
  BlackboardEntry entry;
  int logged_desirability = 0;
};

/// Parses the step records of a JSONL episode log; the summary line is skipped.
std::vector<LoggedEntry> read_logged_entries(std::istream& in);

}  // namespace psrb
