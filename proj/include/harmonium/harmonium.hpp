#pragma once

// Umbrella header: the full engine except the CLI front end
// (include <harmonium/cli.hpp> separately for that).

#include "config.hpp"
#include "consonance.hpp"
#include "errors.hpp"
#include "euler.hpp"
#include "modulation.hpp"
#include "pcset.hpp"
#include "pythag.hpp"
#include "rational.hpp"
#include "scales.hpp"
#include "tonality.hpp"
#include "wav.hpp"
