#pragma once

#include "stbcsm/beamforming.hpp"
#include "stbcsm/channel.hpp"
#include "stbcsm/config.hpp"
#include "stbcsm/constellation.hpp"
#include "stbcsm/csv.hpp"
#include "stbcsm/engine.hpp"
#include "stbcsm/error.hpp"
#include "stbcsm/link.hpp"
#include "stbcsm/precoding.hpp"
#include "stbcsm/presets.hpp"
#include "stbcsm/rng.hpp"
#include "stbcsm/sm.hpp"
#include "stbcsm/stbc_sm.hpp"
#include "stbcsm/types.hpp"
#include "stbcsm/vblast.hpp"
