#pragma once

#include "smbraid/algebra.hpp"
#include "smbraid/analysis.hpp"
#include "smbraid/error.hpp"
#include "smbraid/phi.hpp"
#include "smbraid/reps.hpp"
#include "smbraid/scalars.hpp"
#include "smbraid/words.hpp"
