#pragma once

// Umbrella header for the whole library.

#include "fourfold/certificate.hpp"
#include "fourfold/checked.hpp"
#include "fourfold/intmat.hpp"
#include "fourfold/knot.hpp"
#include "fourfold/lattice.hpp"
#include "fourfold/laurent.hpp"
#include "fourfold/manifold.hpp"
#include "fourfold/parser.hpp"
#include "fourfold/report.hpp"
#include "fourfold/swcalc.hpp"
