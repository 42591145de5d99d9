#pragma once

// Umbrella header for the alexdual library.

#include "alexdual/alexander.hpp"
#include "alexdual/campaign.hpp"
#include "alexdual/complex.hpp"
#include "alexdual/errors.hpp"
#include "alexdual/ground.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/io.hpp"
#include "alexdual/isomorphism.hpp"
#include "alexdual/lattice.hpp"
#include "alexdual/moves.hpp"
#include "alexdual/poset.hpp"
#include "alexdual/rng.hpp"
#include "alexdual/simplex.hpp"
#include "alexdual/snf.hpp"
