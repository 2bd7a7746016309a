// roughmatroid.hpp -- umbrella header
#pragma once

#include "roughmatroid/caps.hpp"
#include "roughmatroid/errors.hpp"
#include "roughmatroid/format.hpp"
#include "roughmatroid/generate.hpp"
#include "roughmatroid/induced.hpp"
#include "roughmatroid/instance.hpp"
#include "roughmatroid/matroid.hpp"
#include "roughmatroid/rough.hpp"
#include "roughmatroid/set_family.hpp"
#include "roughmatroid/subset.hpp"
#include "roughmatroid/verify.hpp"
