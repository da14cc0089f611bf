#ifndef SALPROP_SALPROP_HPP
#define SALPROP_SALPROP_HPP

// Umbrella header for the relativistic propagator library.

#include "salprop/baeumer.hpp"
#include "salprop/errors.hpp"
#include "salprop/quadrature.hpp"
#include "salprop/salpeter.hpp"
#include "salprop/series.hpp"
#include "salprop/specfun.hpp"
#include "salprop/verify.hpp"
#include "salprop/wavefunc.hpp"

#endif  // SALPROP_SALPROP_HPP
