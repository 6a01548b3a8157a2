#pragma once

#include "boundary.hpp"
#include "builtins.hpp"
#include "cyclotomic.hpp"
#include "foxcalc.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "seifert.hpp"
#include "signature.hpp"
