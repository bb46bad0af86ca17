// Umbrella header: integer RANMAR, seeding, jump-ahead, serialization.
// The floating-point reference oracle is deliberately not included here;
// tests and benchmarks pull in ranmar/reference/float_ranmar.hpp directly.
#pragma once

#include "ranmar/core.hpp"
#include "ranmar/init.hpp"
#include "ranmar/jump.hpp"
#include "ranmar/jumpcount.hpp"
#include "ranmar/polyring.hpp"
#include "ranmar/serialize.hpp"
