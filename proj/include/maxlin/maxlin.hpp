#pragma once

#include "maxlin/bitvec.hpp"
#include "maxlin/brute_force.hpp"
#include "maxlin/cnf.hpp"
#include "maxlin/decide.hpp"
#include "maxlin/errors.hpp"
#include "maxlin/generate.hpp"
#include "maxlin/greedy.hpp"
#include "maxlin/io.hpp"
#include "maxlin/marking.hpp"
#include "maxlin/polynomial.hpp"
#include "maxlin/reduce.hpp"
#include "maxlin/sat_decide.hpp"
#include "maxlin/system.hpp"
