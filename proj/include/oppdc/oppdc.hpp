#pragma once

#include "oppdc/budget.hpp"
#include "oppdc/construct/basic.hpp"
#include "oppdc/construct/block_graph.hpp"
#include "oppdc/construct/compose.hpp"
#include "oppdc/construct/fixtures.hpp"
#include "oppdc/construct/grow.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/socdc.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/decompose.hpp"
#include "oppdc/graph/dot.hpp"
#include "oppdc/graph/edge_list.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/graph6.hpp"
#include "oppdc/graph/structure.hpp"
#include "oppdc/hunt/filter.hpp"
#include "oppdc/hunt/scan.hpp"
#include "oppdc/solve/complete_graph.hpp"
#include "oppdc/solve/lift.hpp"
#include "oppdc/solve/search.hpp"
#include "oppdc/solve/structured.hpp"
