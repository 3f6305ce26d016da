#pragma once

#include "vip/asymptotics.hpp"
#include "vip/dsl.hpp"
#include "vip/error.hpp"
#include "vip/filtration.hpp"
#include "vip/interpolate.hpp"
#include "vip/lp.hpp"
#include "vip/monomial.hpp"
#include "vip/oracle.hpp"
#include "vip/rational.hpp"
#include "vip/thresholds.hpp"
