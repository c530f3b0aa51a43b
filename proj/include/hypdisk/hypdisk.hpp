#pragma once

// Pseudohyperbolic geometry of the unit disk: metrics, Moebius maps,
// pseudohyperbolic disks, and the closed-form envelope of the real-centered
// disk family, each closed form backed by a brute-force numerical oracle.

#include "hypdisk/checks.hpp"
#include "hypdisk/disks.hpp"
#include "hypdisk/envelope.hpp"
#include "hypdisk/figures.hpp"
#include "hypdisk/format.hpp"
#include "hypdisk/geom.hpp"
#include "hypdisk/metric.hpp"
#include "hypdisk/moebius.hpp"
#include "hypdisk/oracle.hpp"
#include "hypdisk/report.hpp"
#include "hypdisk/sampler.hpp"
