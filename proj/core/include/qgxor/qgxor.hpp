// Copyright 2026 The qgxor Authors
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

#include "qgxor/errors.hpp"
#include "qgxor/gates.hpp"
#include "qgxor/linalg.hpp"
#include "qgxor/purify.hpp"
#include "qgxor/random.hpp"
#include "qgxor/ring.hpp"
#include "qgxor/state.hpp"
#include "qgxor/teleport.hpp"
#include "qgxor/version.hpp"
