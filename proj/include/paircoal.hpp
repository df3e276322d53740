#pragma once

#include "paircoal/vertex_set.hpp"
#include "paircoal/graph.hpp"
#include "paircoal/canonical.hpp"
#include "paircoal/matching.hpp"
#include "paircoal/domination.hpp"
#include "paircoal/partition.hpp"
#include "paircoal/coalition.hpp"
#include "paircoal/families.hpp"
#include "paircoal/io.hpp"
#include "paircoal/enumeration.hpp"
#include "paircoal/suites.hpp"
