#pragma once

#include "setcirc/bounds.hpp"
#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/engines/certificate.hpp"
#include "setcirc/engines/clamped.hpp"
#include "setcirc/engines/decide.hpp"
#include "setcirc/engines/exact.hpp"
#include "setcirc/engines/search.hpp"
#include "setcirc/engines/singleton.hpp"
#include "setcirc/engines/verdict.hpp"
#include "setcirc/error.hpp"
#include "setcirc/exact_set.hpp"
#include "setcirc/nat_rep.hpp"
#include "setcirc/natural.hpp"
#include "setcirc/numtheory.hpp"
#include "setcirc/oracle.hpp"
#include "setcirc/random_circuit.hpp"
#include "setcirc/reductions.hpp"
#include "setcirc/text_format.hpp"
#include "setcirc/transforms.hpp"
#include "setcirc/vec_rep.hpp"
