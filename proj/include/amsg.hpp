#pragma once

#include "amsg/checked.hpp"
#include "amsg/classify.hpp"
#include "amsg/conditions.hpp"
#include "amsg/core.hpp"
#include "amsg/verify.hpp"
