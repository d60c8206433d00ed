#pragma once

// Umbrella header: the whole library in one include.

#include "harmonic/cli.hpp"
#include "harmonic/edge_list.hpp"
#include "harmonic/enumeration.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/index_set.hpp"
#include "harmonic/matrix.hpp"
#include "harmonic/rational.hpp"
#include "harmonic/signs.hpp"
#include "harmonic/symbolic.hpp"
#include "harmonic/theorems.hpp"
