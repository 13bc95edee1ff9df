#pragma once

#include "teamfit/types.hpp"

namespace teamfit {

// Per task, independently: keep adding the expert overlapping the most with
// the task's uncovered skills until the task is covered or nobody overlaps.
// Output is independent of lambda; the reported cost uses lambda = 0.
SolveReport set_cover(const Instance& instance);

// Load-aware set cover: per task (ascending id), add the expert whose
// addition decreases the combined cost the most; stop once no addition gives
// a strict decrease.
SolveReport best_cost_greedy(const Instance& instance, double lambda);

// Global variant: repeatedly apply the single (task, expert) addition that
// decreases the combined cost the most, until none does. Quadratic in the
// instance size per iteration; intended for small instances.
SolveReport pair_greedy(const Instance& instance, double lambda);

}  // namespace teamfit
