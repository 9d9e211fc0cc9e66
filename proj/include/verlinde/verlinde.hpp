#pragma once

#include "verlinde/errors.hpp"
#include "verlinde/lattice.hpp"
#include "verlinde/lie.hpp"
#include "verlinde/rep_ring.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/axioms.hpp"
#include "verlinde/spectrum.hpp"
#include "verlinde/io.hpp"
#include "verlinde/query.hpp"
