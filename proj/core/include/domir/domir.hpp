#pragma once

#include "domir/cds.hpp"
#include "domir/generators.hpp"
#include "domir/graph.hpp"
#include "domir/instance_io.hpp"
#include "domir/ir_branch.hpp"
#include "domir/ir_small.hpp"
#include "domir/irredundance.hpp"
#include "domir/matching.hpp"
#include "domir/oracles.hpp"
#include "domir/rational.hpp"
#include "domir/recurrences.hpp"
#include "domir/scds.hpp"
#include "domir/vertex_set.hpp"
