#pragma once

#include "nonholo/constraint.hpp"
#include "nonholo/errors.hpp"
#include "nonholo/implicit_dynamics.hpp"
#include "nonholo/integrate.hpp"
#include "nonholo/model.hpp"
#include "nonholo/parametric_dynamics.hpp"
#include "nonholo/systems.hpp"
#include "nonholo/types.hpp"
#include "nonholo/verify.hpp"
