#pragma once

#include "cactus/backtrack.hpp"
#include "cactus/dp_engine.hpp"
#include "cactus/graph.hpp"
#include "cactus/interval.hpp"
#include "cactus/interval_dp.hpp"
#include "cactus/oracle.hpp"
#include "cactus/partition_check.hpp"
#include "cactus/problem.hpp"
#include "cactus/random_cactus.hpp"
#include "cactus/tree.hpp"
#include "cactus/tuple_dp.hpp"
#include "cactus/variants.hpp"
