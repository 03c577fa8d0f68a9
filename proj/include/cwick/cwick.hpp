#pragma once

// Umbrella header for the twisted Wick algebra library.

#include "cwick/bigint.hpp"
#include "cwick/checks.hpp"
#include "cwick/contraction.hpp"
#include "cwick/errors.hpp"
#include "cwick/polynomial.hpp"
#include "cwick/quotient.hpp"
#include "cwick/rational.hpp"
#include "cwick/report.hpp"
#include "cwick/scalar.hpp"
#include "cwick/scalar_parser.hpp"
#include "cwick/signature.hpp"
#include "cwick/specfile.hpp"
#include "cwick/subspace.hpp"
#include "cwick/tensor.hpp"
#include "cwick/twist.hpp"
#include "cwick/version.hpp"
#include "cwick/wick.hpp"
