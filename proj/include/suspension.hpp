#pragma once

#include "suspension/analysis.hpp"
#include "suspension/blow_down.hpp"
#include "suspension/canonical.hpp"
#include "suspension/cover.hpp"
#include "suspension/document.hpp"
#include "suspension/invariants.hpp"
#include "suspension/linear_algebra.hpp"
#include "suspension/newton.hpp"
#include "suspension/recognizer.hpp"
