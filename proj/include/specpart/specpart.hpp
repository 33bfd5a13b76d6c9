#pragma once

#include "specpart/bisect.hpp"
#include "specpart/error.hpp"
#include "specpart/family.hpp"
#include "specpart/family_config.hpp"
#include "specpart/generators.hpp"
#include "specpart/graph.hpp"
#include "specpart/graph_io.hpp"
#include "specpart/harness.hpp"
#include "specpart/matrix.hpp"
#include "specpart/oracle.hpp"
#include "specpart/spectrum.hpp"
