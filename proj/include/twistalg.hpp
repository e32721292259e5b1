#pragma once

#include "twistalg/algebra.hpp"
#include "twistalg/cd_oracle.hpp"
#include "twistalg/clifford.hpp"
#include "twistalg/dyadic.hpp"
#include "twistalg/error.hpp"
#include "twistalg/group.hpp"
#include "twistalg/io.hpp"
#include "twistalg/l2_experiments.hpp"
#include "twistalg/twist.hpp"
