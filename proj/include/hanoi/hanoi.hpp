#pragma once

#include "hanoi/analysis.hpp"
#include "hanoi/constructor.hpp"
#include "hanoi/core.hpp"
#include "hanoi/errors.hpp"
#include "hanoi/numerics.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/serialize.hpp"
#include "hanoi/verify.hpp"
