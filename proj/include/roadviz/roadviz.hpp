#pragma once

#include "roadviz/cayley_io.hpp"
#include "roadviz/digraph.hpp"
#include "roadviz/error.hpp"
#include "roadviz/graph_core.hpp"
#include "roadviz/layout.hpp"
#include "roadviz/layout_json.hpp"
#include "roadviz/random_graph.hpp"
#include "roadviz/svg_render.hpp"
#include "roadviz/synchro.hpp"
