#pragma once

#include "ospinv/pfaffian/identities.hpp"
#include "ospinv/pfaffian/invariants.hpp"
#include "ospinv/pfaffian/omega.hpp"
#include "ospinv/pfaffian/osp22.hpp"
#include "ospinv/pfaffian/poly_matrix.hpp"
