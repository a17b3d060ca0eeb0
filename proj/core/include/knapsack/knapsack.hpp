#pragma once

#include "knapsack/errors.hpp"
#include "knapsack/ext_profit.hpp"
#include "knapsack/instance_io.hpp"
#include "knapsack/maxplus.hpp"
#include "knapsack/model.hpp"
#include "knapsack/oracles.hpp"
#include "knapsack/proximity.hpp"
#include "knapsack/reduction.hpp"
#include "knapsack/smawk.hpp"
#include "knapsack/solver01.hpp"
