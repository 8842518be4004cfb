#pragma once

#include "qbruhat/cartan.hpp"
#include "qbruhat/centre.hpp"
#include "qbruhat/charring.hpp"
#include "qbruhat/errors.hpp"
#include "qbruhat/linalg.hpp"
#include "qbruhat/rplus.hpp"
#include "qbruhat/scalar.hpp"
#include "qbruhat/strata.hpp"
#include "qbruhat/uqrep.hpp"
#include "qbruhat/verify.hpp"
#include "qbruhat/weyl.hpp"
