#pragma once

#include "numfun/arith.hpp"
#include "numfun/augmentation.hpp"
#include "numfun/combination.hpp"
#include "numfun/deviation.hpp"
#include "numfun/divided_power.hpp"
#include "numfun/functor.hpp"
#include "numfun/gamma_epsilon.hpp"
#include "numfun/json_io.hpp"
#include "numfun/lattice.hpp"
#include "numfun/matrix.hpp"
#include "numfun/modules.hpp"
#include "numfun/morita.hpp"
#include "numfun/multiset.hpp"
#include "numfun/verify.hpp"
