/*
   Copyright 2026 The spechtlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "spechtlab/errors.hpp"
#include "spechtlab/rational.hpp"
#include "spechtlab/radical.hpp"
#include "spechtlab/permutation.hpp"
#include "spechtlab/polynomial.hpp"
#include "spechtlab/parallel.hpp"
#include "spechtlab/algebra.hpp"
#include "spechtlab/pair_algebra.hpp"
#include "spechtlab/partition.hpp"
#include "spechtlab/tableau.hpp"
#include "spechtlab/young_units.hpp"
#include "spechtlab/specht.hpp"
#include "spechtlab/omega.hpp"
#include "spechtlab/selftest.hpp"
