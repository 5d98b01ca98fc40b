#pragma once

#include "cqaoa/bench.hpp"
#include "cqaoa/classical.hpp"
#include "cqaoa/errors.hpp"
#include "cqaoa/estimate.hpp"
#include "cqaoa/evolve.hpp"
#include "cqaoa/expm.hpp"
#include "cqaoa/graph.hpp"
#include "cqaoa/nelder_mead.hpp"
#include "cqaoa/optimize.hpp"
#include "cqaoa/problem.hpp"
#include "cqaoa/rng.hpp"
#include "cqaoa/state.hpp"
#include "cqaoa/verify.hpp"
