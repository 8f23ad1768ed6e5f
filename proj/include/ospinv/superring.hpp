#pragma once

#include "ospinv/superring/basis.hpp"
#include "ospinv/superring/division.hpp"
#include "ospinv/superring/localized.hpp"
#include "ospinv/superring/metric.hpp"
#include "ospinv/superring/monomial.hpp"
#include "ospinv/superring/polynomial.hpp"
#include "ospinv/superring/rational.hpp"
#include "ospinv/superring/scalar.hpp"
#include "ospinv/superring/scalar_matrix.hpp"
#include "ospinv/superring/serialize.hpp"
#include "ospinv/superring/signature.hpp"
#include "ospinv/superring/substitution.hpp"
