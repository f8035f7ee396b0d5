#ifndef MULTICONF_MULTICONF_HPP
#define MULTICONF_MULTICONF_HPP

#include "multiconf/bench.hpp"
#include "multiconf/core/propagators.hpp"
#include "multiconf/core/rational.hpp"
#include "multiconf/core/solver.hpp"
#include "multiconf/core/store.hpp"
#include "multiconf/io/json.hpp"
#include "multiconf/model/compile.hpp"
#include "multiconf/model/predicate.hpp"
#include "multiconf/model/question.hpp"
#include "multiconf/model/task.hpp"
#include "multiconf/model/validate.hpp"
#include "multiconf/seating.hpp"
#include "multiconf/synth.hpp"

#endif
