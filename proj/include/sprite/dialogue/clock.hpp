#pragma once

#include "sprite/common/clock.hpp"

namespace sprite::dialogue {

using sprite::Clock;
using sprite::ManualClock;
using sprite::Nanos;
using sprite::SteadyClock;
using sprite::VirtualClock;
using sprite::to_nanos;
using sprite::to_seconds;

}  // namespace sprite::dialogue
