#pragma once

#include "qmt/bernoulli.hpp"
#include "qmt/coevent.hpp"
#include "qmt/dynamics.hpp"
#include "qmt/error.hpp"
#include "qmt/event.hpp"
#include "qmt/event_bitmap.hpp"
#include "qmt/io.hpp"
#include "qmt/limits.hpp"
#include "qmt/partition.hpp"
#include "qmt/rational.hpp"
#include "qmt/simplex.hpp"
#include "qmt/theory.hpp"
