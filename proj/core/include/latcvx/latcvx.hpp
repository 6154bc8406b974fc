#pragma once

#include "latcvx/certify.hpp"
#include "latcvx/constructions.hpp"
#include "latcvx/errors.hpp"
#include "latcvx/functionals.hpp"
#include "latcvx/io.hpp"
#include "latcvx/lattice.hpp"
#include "latcvx/linalg.hpp"
#include "latcvx/lp.hpp"
#include "latcvx/polytope.hpp"
#include "latcvx/rational.hpp"
