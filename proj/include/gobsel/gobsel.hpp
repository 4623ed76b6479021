// SPDX-License-Identifier: Apache-2.0
//
// gobsel: coordinated grid-of-beams selection for FDD multi-user massive MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef GOBSEL_GOBSEL_HPP
#define GOBSEL_GOBSEL_HPP

#include "gobsel/types.hpp"
#include "gobsel/linalg.hpp"
#include "gobsel/channel.hpp"
#include "gobsel/codebook.hpp"
#include "gobsel/training.hpp"
#include "gobsel/precoding.hpp"
#include "gobsel/beamsel.hpp"
#include "gobsel/harness.hpp"
#include "gobsel/io.hpp"
#include "gobsel/oracle.hpp"
#include "gobsel/selftest.hpp"

#endif // GOBSEL_GOBSEL_HPP
