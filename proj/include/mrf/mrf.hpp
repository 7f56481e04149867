#pragma once

#include "mrf/energy.hpp"
#include "mrf/glyphs.hpp"
#include "mrf/metrics.hpp"
#include "mrf/noise.hpp"
#include "mrf/optimizers.hpp"
#include "mrf/oracle.hpp"
#include "mrf/pbm.hpp"
#include "mrf/report_io.hpp"
#include "mrf/spin_image.hpp"
#include "mrf/trace.hpp"
