#pragma once

// Umbrella header.

#include "gpcircle/circle.hpp"
#include "gpcircle/elliptic.hpp"
#include "gpcircle/families.hpp"
#include "gpcircle/rational.hpp"
#include "gpcircle/search.hpp"
#include "gpcircle/witness_io.hpp"
