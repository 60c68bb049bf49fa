// Copyright 2026 The Supercat Authors
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

#include "supercat/catalysis.hpp"
#include "supercat/epsilon_family.hpp"
#include "supercat/error.hpp"
#include "supercat/majorization.hpp"
#include "supercat/oracle.hpp"
#include "supercat/scalar.hpp"
#include "supercat/schmidt_vector.hpp"
#include "supercat/supercatalysis.hpp"
