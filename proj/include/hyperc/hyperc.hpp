#pragma once

#include "hyperc/agmodel.hpp"
#include "hyperc/bridge.hpp"
#include "hyperc/finitegrp.hpp"
#include "hyperc/generate.hpp"
#include "hyperc/instance_io.hpp"
#include "hyperc/lie.hpp"
#include "hyperc/verify.hpp"
#include "hyperc/zlattice.hpp"
