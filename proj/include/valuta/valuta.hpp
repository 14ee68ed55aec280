#pragma once

#include "valuta/common.hpp"
#include "valuta/decomposition.hpp"
#include "valuta/enumerate.hpp"
#include "valuta/errors.hpp"
#include "valuta/families.hpp"
#include "valuta/invariants.hpp"
#include "valuta/io.hpp"
#include "valuta/isomorphism.hpp"
#include "valuta/linalg.hpp"
#include "valuta/matroid.hpp"
#include "valuta/poly.hpp"
#include "valuta/verify.hpp"
