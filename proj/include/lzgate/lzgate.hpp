// Copyright 2026 The lzgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "lzgate/core/complex2x2.hpp"
#include "lzgate/core/errors.hpp"
#include "lzgate/core/gamma.hpp"
#include "lzgate/analytic/adiabatic_frame.hpp"
#include "lzgate/analytic/pulse.hpp"
#include "lzgate/analytic/phases.hpp"
#include "lzgate/analytic/scattering.hpp"
#include "lzgate/propagator/profile.hpp"
#include "lzgate/propagator/evolve.hpp"
#include "lzgate/propagator/trace.hpp"
#include "lzgate/composite/design.hpp"
#include "lzgate/composite/compose.hpp"
#include "lzgate/error/metrics.hpp"
