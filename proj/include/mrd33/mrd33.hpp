#pragma once

// Umbrella header for the mrd33 library.

#include "exact.hpp"
#include "gf.hpp"
#include "mat3.hpp"
#include "rankcode.hpp"
#include "menichetti.hpp"
#include "semifield.hpp"
#include "census.hpp"
#include "suites.hpp"
#include "report_io.hpp"
