#pragma once

#include "totpos/error.hpp"
#include "totpos/factorization.hpp"
#include "totpos/gamma0.hpp"
#include "totpos/laurent.hpp"
#include "totpos/matrix.hpp"
#include "totpos/network.hpp"
#include "totpos/parallel.hpp"
#include "totpos/permutation.hpp"
#include "totpos/positivity.hpp"
#include "totpos/random.hpp"
#include "totpos/scalar.hpp"
#include "totpos/selfcheck.hpp"
#include "totpos/somos.hpp"
#include "totpos/wiring.hpp"
#include "totpos/words.hpp"
