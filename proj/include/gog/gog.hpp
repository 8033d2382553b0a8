#pragma once

#include "gog/bignum.hpp"
#include "gog/counting.hpp"
#include "gog/enumeration.hpp"
#include "gog/error.hpp"
#include "gog/io.hpp"
#include "gog/lattice.hpp"
#include "gog/meet_census.hpp"
#include "gog/triangle.hpp"
#include "gog/verify.hpp"
