#pragma once

#include "error.hpp"
#include "monomial.hpp"
#include "ideal.hpp"
#include "decomposition.hpp"
#include "polymatroid.hpp"
#include "classify.hpp"
#include "sampler.hpp"
#include "harness.hpp"
#include "io.hpp"
