#pragma once

#include "layered/amplitude.hpp"
#include "layered/amplitude_inversion.hpp"
#include "layered/arrival.hpp"
#include "layered/delta_train.hpp"
#include "layered/errors.hpp"
#include "layered/forward.hpp"
#include "layered/invert_medium.hpp"
#include "layered/jacobi.hpp"
#include "layered/lattice.hpp"
#include "layered/medium.hpp"
#include "layered/oracle.hpp"
