#pragma once

#include "dire/combinatorics.hpp"
#include "dire/constraints.hpp"
#include "dire/diregraph.hpp"
#include "dire/election.hpp"
#include "dire/error.hpp"
#include "dire/experiment.hpp"
#include "dire/instance_io.hpp"
#include "dire/mallows.hpp"
#include "dire/random.hpp"
#include "dire/reductions.hpp"
#include "dire/scoring.hpp"
#include "dire/synthetic.hpp"
#include "dire/winner.hpp"
