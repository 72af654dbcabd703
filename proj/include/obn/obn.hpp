#pragma once

// Umbrella header for the obn toolkit.

#include "obn/bounds.hpp"
#include "obn/burning.hpp"
#include "obn/errors.hpp"
#include "obn/fpt.hpp"
#include "obn/graph.hpp"
#include "obn/invariants.hpp"
#include "obn/orientation.hpp"
#include "obn/reductions.hpp"
#include "obn/solver.hpp"
