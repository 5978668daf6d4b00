#pragma once

// Umbrella header: the whole library.

#include "orbitlang/bigcount.hpp"
#include "orbitlang/bijection.hpp"
#include "orbitlang/canonical.hpp"
#include "orbitlang/errors.hpp"
#include "orbitlang/formulas.hpp"
#include "orbitlang/orbits.hpp"
#include "orbitlang/polar.hpp"
#include "orbitlang/prime.hpp"
#include "orbitlang/sl2.hpp"
#include "orbitlang/text.hpp"
#include "orbitlang/vector_pair.hpp"
#include "orbitlang/verify.hpp"
#include "orbitlang/words.hpp"
