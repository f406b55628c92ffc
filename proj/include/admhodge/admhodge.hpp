#pragma once

#include "admhodge/binomial.hpp"
#include "admhodge/degree2.hpp"
#include "admhodge/integrals.hpp"
#include "admhodge/lambda1.hpp"
#include "admhodge/rational.hpp"
#include "admhodge/strata.hpp"
