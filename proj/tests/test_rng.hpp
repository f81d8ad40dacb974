#pragma once

#include "qgk/rng.hpp"

using TestRng = qgk::Rng;
