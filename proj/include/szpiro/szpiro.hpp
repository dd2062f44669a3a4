#pragma once

// Umbrella header for the whole toolkit.

#include "szpiro/numeric.hpp"
#include "szpiro/integer_core.hpp"
#include "szpiro/poly.hpp"
#include "szpiro/modp.hpp"
#include "szpiro/poly_factor.hpp"
#include "szpiro/binary_form.hpp"
#include "szpiro/invariants.hpp"
#include "szpiro/elliptic.hpp"
#include "szpiro/families.hpp"
#include "szpiro/parallel.hpp"
#include "szpiro/experiments.hpp"
#include "szpiro/multipoly.hpp"
#include "szpiro/density.hpp"
