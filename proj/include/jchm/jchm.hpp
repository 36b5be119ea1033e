// jchm.hpp — Umbrella header

#pragma once

#include "jchm/ansatz_reduction.hpp"
#include "jchm/ed_oracle.hpp"
#include "jchm/errors.hpp"
#include "jchm/excitation.hpp"
#include "jchm/jc_spectrum.hpp"
#include "jchm/output.hpp"
#include "jchm/phase_boundary.hpp"
#include "jchm/version.hpp"
