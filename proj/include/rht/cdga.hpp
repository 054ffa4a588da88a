#pragma once

#include "rht/cohomology.hpp"
#include "rht/finite.hpp"
#include "rht/graded.hpp"
#include "rht/morphism.hpp"
#include "rht/quotient.hpp"
#include "rht/sullivan.hpp"
#include "rht/validate.hpp"
