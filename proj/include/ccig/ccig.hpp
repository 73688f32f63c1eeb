#pragma once

// Umbrella header.

#include "ccig/audit.hpp"
#include "ccig/catalog.hpp"
#include "ccig/char_table.hpp"
#include "ccig/classify.hpp"
#include "ccig/cyclotomic.hpp"
#include "ccig/error.hpp"
#include "ccig/fixtures.hpp"
#include "ccig/group.hpp"
#include "ccig/group_io.hpp"
#include "ccig/modular.hpp"
#include "ccig/polynomial.hpp"
#include "ccig/report_json.hpp"
#include "ccig/spectra.hpp"
