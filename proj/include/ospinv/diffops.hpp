#pragma once

#include "ospinv/diffops/generators.hpp"
#include "ospinv/diffops/operator.hpp"
