#pragma once

#include "vessiot/errors.hpp"
#include "vessiot/scalar.hpp"
#include "vessiot/poly.hpp"
#include "vessiot/ratfunc.hpp"
#include "vessiot/mpoly.hpp"
#include "vessiot/matrix.hpp"
#include "vessiot/automorphic.hpp"
#include "vessiot/homspace.hpp"
#include "vessiot/darboux.hpp"
#include "vessiot/elliptic.hpp"
#include "vessiot/classical_forms.hpp"
#include "vessiot/parse.hpp"
#include "vessiot/format.hpp"
