#pragma once

#include "jcouple/errors.hpp"
#include "jcouple/numerics/bigint.hpp"
#include "jcouple/numerics/factorial.hpp"
#include "jcouple/numerics/halfint.hpp"
#include "jcouple/numerics/phased_surd_sum.hpp"
#include "jcouple/numerics/surd.hpp"
