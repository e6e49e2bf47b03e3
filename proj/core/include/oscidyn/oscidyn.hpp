#pragma once

#include "oscidyn/classical.hpp"
#include "oscidyn/config.hpp"
#include "oscidyn/cumulants.hpp"
#include "oscidyn/errors.hpp"
#include "oscidyn/io.hpp"
#include "oscidyn/model.hpp"
#include "oscidyn/numerics.hpp"
#include "oscidyn/observables.hpp"
#include "oscidyn/oracle.hpp"
#include "oscidyn/run.hpp"
#include "oscidyn/validity.hpp"
