#pragma once

// Umbrella header: Hurwitz zeta as the single computational primitive, with
// Bernoulli polynomials, gamma/psi, the Fourier-side functional equation and
// Dirichlet L-series derived from it.

#include "hurwitz/bernoulli.hpp"
#include "hurwitz/character_io.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/fourier.hpp"
#include "hurwitz/gamma_psi.hpp"
#include "hurwitz/lseries.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/zeta.hpp"
