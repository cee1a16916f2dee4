#pragma once

// Umbrella header: exact metric-dimension toolkit.

#include "mdim/errors.hpp"
#include "mdim/families.hpp"
#include "mdim/frac_dim.hpp"
#include "mdim/graph.hpp"
#include "mdim/integer_dim.hpp"
#include "mdim/linear_program.hpp"
#include "mdim/pair_system.hpp"
#include "mdim/rational.hpp"
#include "mdim/simplex.hpp"
#include "mdim/tree_dim.hpp"
