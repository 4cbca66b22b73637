#pragma once

#include "ncspec/axioms.hpp"
#include "ncspec/clifford.hpp"
#include "ncspec/dirac.hpp"
#include "ncspec/linalg.hpp"
#include "ncspec/nctorus.hpp"
#include "ncspec/peterweyl.hpp"
#include "ncspec/serialize.hpp"
#include "ncspec/spectral_data.hpp"
#include "ncspec/summability.hpp"
