#pragma once

// Umbrella header for the belief-functions toolkit.

#include "bft/frame.hpp"
#include "bft/fusion.hpp"
#include "bft/io.hpp"
#include "bft/mass.hpp"
#include "bft/metrics.hpp"
#include "bft/report.hpp"
#include "bft/transforms.hpp"
