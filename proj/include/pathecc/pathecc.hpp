// Copyright 2026 The pathecc Authors
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

#include "pathecc/bounds.hpp"
#include "pathecc/clawnet.hpp"
#include "pathecc/dompath.hpp"
#include "pathecc/families.hpp"
#include "pathecc/generators.hpp"
#include "pathecc/graph.hpp"
#include "pathecc/io.hpp"
#include "pathecc/oracles.hpp"
#include "pathecc/random.hpp"
#include "pathecc/serialize.hpp"
#include "pathecc/solver.hpp"
#include "pathecc/witness.hpp"
