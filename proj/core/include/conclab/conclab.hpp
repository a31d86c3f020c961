#pragma once

#include "conclab/biconcurrence.hpp"
#include "conclab/concurrence.hpp"
#include "conclab/error.hpp"
#include "conclab/generators.hpp"
#include "conclab/linalg.hpp"
#include "conclab/optim.hpp"
#include "conclab/separability.hpp"
#include "conclab/states.hpp"
