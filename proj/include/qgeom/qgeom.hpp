#pragma once

#include "qgeom/binomial.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/exact_lp.hpp"
#include "qgeom/families.hpp"
#include "qgeom/multi_index.hpp"
#include "qgeom/partition.hpp"
#include "qgeom/polyhedral.hpp"
#include "qgeom/segre.hpp"
#include "qgeom/state.hpp"
#include "qgeom/toric.hpp"
