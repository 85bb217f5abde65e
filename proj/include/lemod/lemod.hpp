#pragma once

#include "lemod/check.hpp"
#include "lemod/descriptor.hpp"
#include "lemod/error.hpp"
#include "lemod/finite_lattice.hpp"
#include "lemod/finite_ring.hpp"
#include "lemod/finite_space.hpp"
#include "lemod/index_set.hpp"
#include "lemod/instance_gen.hpp"
#include "lemod/le_module.hpp"
#include "lemod/natural_map.hpp"
#include "lemod/spectrum_topology.hpp"
#include "lemod/verifier.hpp"
