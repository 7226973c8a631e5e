#pragma once

#include "wsat/graph.hpp"
#include "wsat/canonical.hpp"
#include "wsat/enumerate.hpp"
#include "wsat/pattern.hpp"
#include "wsat/percolation.hpp"
#include "wsat/parallel.hpp"
#include "wsat/solver.hpp"
#include "wsat/constructions.hpp"
#include "wsat/classify.hpp"
#include "wsat/io.hpp"
