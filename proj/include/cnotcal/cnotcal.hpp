// Copyright 2026 The cnotcal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "cnotcal/calibrate.hpp"
#include "cnotcal/commands.hpp"
#include "cnotcal/equivclass.hpp"
#include "cnotcal/errors.hpp"
#include "cnotcal/model.hpp"
#include "cnotcal/nelder_mead.hpp"
#include "cnotcal/propagate.hpp"
#include "cnotcal/qmat.hpp"
#include "cnotcal/sequences.hpp"
#include "cnotcal/serialize.hpp"
#include "cnotcal/verify.hpp"
