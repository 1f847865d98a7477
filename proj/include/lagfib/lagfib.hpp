#pragma once

#include "lagfib/char_classes.hpp"
#include "lagfib/error.hpp"
#include "lagfib/fibration_formulas.hpp"
#include "lagfib/fourfold_enumerator.hpp"
#include "lagfib/graded_ring.hpp"
#include "lagfib/intersection_products.hpp"
#include "lagfib/io.hpp"
#include "lagfib/rational.hpp"
