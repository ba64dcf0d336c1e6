// Copyright 2026 The Tower Interpolation Authors.
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

#include "tower/error.hpp"
#include "tower/field.hpp"
#include "tower/monomial.hpp"
#include "tower/polynomial.hpp"
#include "tower/groebner.hpp"
#include "tower/site.hpp"
#include "tower/covering.hpp"
#include "tower/random_site.hpp"
#include "tower/bases.hpp"
#include "tower/moller.hpp"
#include "tower/verify.hpp"
#include "tower/solver.hpp"
#include "tower/io.hpp"
#include "tower/bench.hpp"
