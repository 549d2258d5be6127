#pragma once

#include "rsv/config.hpp"
#include "rsv/errors.hpp"
#include "rsv/hive.hpp"
#include "rsv/laurent.hpp"
#include "rsv/lr.hpp"
#include "rsv/parallel.hpp"
#include "rsv/rational.hpp"
#include "rsv/schur.hpp"
#include "rsv/series.hpp"
#include "rsv/unramified.hpp"
#include "rsv/weights.hpp"
