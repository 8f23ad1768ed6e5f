#pragma once

#include "ospinv/decomp/gamma.hpp"
#include "ospinv/decomp/invariants.hpp"
#include "ospinv/decomp/linalg.hpp"
#include "ospinv/decomp/partition.hpp"
#include "ospinv/decomp/tensor.hpp"
