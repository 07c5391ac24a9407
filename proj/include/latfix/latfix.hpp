// Copyright 2026 The latfix Authors
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

#ifndef LATFIX_LATFIX_HPP
#define LATFIX_LATFIX_HPP

#include "latfix/correspondence.hpp"
#include "latfix/elem_set.hpp"
#include "latfix/error.hpp"
#include "latfix/fixed_points.hpp"
#include "latfix/game.hpp"
#include "latfix/game_lab.hpp"
#include "latfix/generate.hpp"
#include "latfix/induced.hpp"
#include "latfix/json_io.hpp"
#include "latfix/lattice.hpp"
#include "latfix/poset.hpp"
#include "latfix/rational.hpp"
#include "latfix/report.hpp"
#include "latfix/rng.hpp"
#include "latfix/subsets.hpp"
#include "latfix/supermodular.hpp"
#include "latfix/theorem_lab.hpp"

#endif  // LATFIX_LATFIX_HPP
